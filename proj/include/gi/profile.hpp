#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gi/subset.hpp"

namespace gi {

struct Individual {
    std::size_t index = 0;
    std::optional<std::string> display_name;
};

// An n x n matrix of qualification opinions over a fixed individual order.
// Row i holds the opinions of individual i; a transposed view is maintained
// so that "who qualifies j" scans are single bitset reads. Profiles are
// treated as immutable once fully constructed; evaluation never mutates.
class Profile {
public:
    explicit Profile(std::size_t n);

    std::size_t size() const { return n_; }

    // phi(who, whom) == 1
    bool qualifies(std::size_t who, std::size_t whom) const {
        return rows_[check(who)].contains(whom);
    }

    void set(std::size_t who, std::size_t whom, bool value);

    const Subset& opinions_of(std::size_t who) const { return rows_[check(who)]; }
    const Subset& qualifiers_of(std::size_t whom) const { return cols_[check(whom)]; }
    const Subset& self_qualifiers() const { return diag_; }

    Subset everyone() const { return Subset::full(n_); }

    Individual individual(std::size_t i) const { return {check(i), names_[i]}; }
    const std::optional<std::string>& name_of(std::size_t i) const { return names_[check(i)]; }
    void set_name(std::size_t i, std::string name) { names_[check(i)] = std::move(name); }

    bool operator==(const Profile& other) const = default;

private:
    std::size_t check(std::size_t i) const {
        if (i >= n_)
            throw InputError("individual index " + std::to_string(i) +
                             " out of range for profile of size " + std::to_string(n_));
        return i;
    }

    std::size_t n_ = 0;
    std::vector<Subset> rows_;
    std::vector<Subset> cols_;
    Subset diag_;
    std::vector<std::optional<std::string>> names_;
};

}  // namespace gi
