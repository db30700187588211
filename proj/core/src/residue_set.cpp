#include "addcomb/residue_set.hpp"

#include <sstream>

namespace addcomb {

ResidueSet::ResidueSet(CyclicGroup group)
    : group_(group), bits_(static_cast<std::size_t>(group.modulus()), false) {}

ResidueSet::ResidueSet(CyclicGroup group, const std::vector<std::int64_t>& members)
    : ResidueSet(group) {
    for (std::int64_t m : members) insert(m);
}

ResidueSet ResidueSet::full(CyclicGroup group) {
    ResidueSet s(group);
    s.bits_.assign(static_cast<std::size_t>(group.modulus()), true);
    s.size_ = group.modulus();
    return s;
}

void ResidueSet::insert(std::int64_t r) {
    auto i = static_cast<std::size_t>(group_.reduce(r));
    if (!bits_[i]) {
        bits_[i] = true;
        ++size_;
    }
}

void ResidueSet::erase(std::int64_t r) {
    auto i = static_cast<std::size_t>(group_.reduce(r));
    if (bits_[i]) {
        bits_[i] = false;
        --size_;
    }
}

std::vector<std::int64_t> ResidueSet::members() const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (std::int64_t r = 0; r < group_.modulus(); ++r)
        if (bits_[static_cast<std::size_t>(r)]) out.push_back(r);
    return out;
}

ResidueSet ResidueSet::negated() const {
    ResidueSet out(group_);
    for (std::int64_t r = 0; r < group_.modulus(); ++r)
        if (bits_[static_cast<std::size_t>(r)]) out.insert(group_.neg(r));
    return out;
}

ResidueSet ResidueSet::without_zero() const {
    ResidueSet out = *this;
    out.erase(0);
    return out;
}

bool ResidueSet::is_subset_of(const ResidueSet& other) const {
    if (group_ != other.group_) return false;
    for (std::int64_t r = 0; r < group_.modulus(); ++r)
        if (bits_[static_cast<std::size_t>(r)] && !other.bits_[static_cast<std::size_t>(r)]) return false;
    return true;
}

std::string ResidueSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (std::int64_t r : members()) {
        if (!first) os << ',';
        os << r;
        first = false;
    }
    os << "} mod " << group_.modulus();
    return os.str();
}

} // namespace addcomb
