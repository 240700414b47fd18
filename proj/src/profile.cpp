#include "halphen/profile.hpp"

#include <algorithm>

namespace halphen {

Profile::Profile(std::map<Int, Int> entries) {
    for (auto it = entries.begin(); it != entries.end();) {
        if (it->second < 0)
            throw NegativeValue("profile value " + std::to_string(it->second) +
                                " at index " + std::to_string(it->first));
        if (it->second == 0)
            it = entries.erase(it);
        else
            ++it;
    }
    entries_ = std::move(entries);
    total_ = 0;
    for (const auto& [n, v] : entries_) total_ += v;
}

Int Profile::at(Int n) const {
    auto it = entries_.find(n);
    return it == entries_.end() ? 0 : it->second;
}

Int Profile::min_index() const {
    if (entries_.empty()) throw DomainError("min_index of zero profile");
    return entries_.begin()->first;
}

Int Profile::max_index() const {
    if (entries_.empty()) throw DomainError("max_index of zero profile");
    return entries_.rbegin()->first;
}

Int Profile::prefix(Int n) const {
    Int sum = 0;
    for (const auto& [i, v] : entries_) {
        if (i > n) break;
        sum += v;
    }
    return sum;
}

Int Profile::double_sum(Int n) const {
    if (entries_.empty() || n < min_index()) return 0;
    const Int top = max_index();
    if (n > top) return double_sum(top) + (n - top) * total_;
    // Single pass: running prefix accumulated once per index in [min, n].
    Int sum = 0;
    Int running = 0;
    Int i = min_index();
    auto it = entries_.begin();
    for (; i <= n; ++i) {
        if (it != entries_.end() && it->first == i) {
            running += it->second;
            ++it;
        }
        sum += running;
    }
    return sum;
}

Profile Profile::serre_reflect() const {
    std::map<Int, Int> reflected;
    for (const auto& [i, v] : entries_) reflected[2 - i] = v;
    return Profile(std::move(reflected));
}

std::vector<Int> Profile::dense() const {
    if (entries_.empty()) return {};
    std::vector<Int> out;
    for (Int i = min_index(); i <= max_index(); ++i) out.push_back(at(i));
    return out;
}

Profile build_profile(const std::vector<std::pair<Int, Int>>& pairs) {
    std::map<Int, Int> entries;
    for (const auto& [n, v] : pairs) {
        if (v < 0)
            throw NegativeValue("profile value " + std::to_string(v) +
                                " at index " + std::to_string(n));
        if (entries.count(n))
            throw DuplicateIndex("duplicate profile index " + std::to_string(n));
        entries[n] = v;
    }
    return Profile(std::move(entries));
}

Profile profile_from_values(const std::vector<Int>& values, Int offset) {
    std::map<Int, Int> entries;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0)
            throw NegativeValue("profile value " + std::to_string(values[i]));
        if (values[i] > 0) entries[offset + static_cast<Int>(i)] = values[i];
    }
    return Profile(std::move(entries));
}

ProfileSums profile_sums(const Profile& p, Int n) {
    return ProfileSums{p.prefix(n), p.double_sum(n), p.total()};
}

namespace {

bool admissible(const Profile& p, const P3Star& c) {
    if (c.s < 2) throw DomainError("P3Star requires s >= 2, got s = " + std::to_string(c.s));
    if (c.d < 1) throw DomainError("P3Star requires d >= 1, got d = " + std::to_string(c.d));
    if (p.total() != c.d)
        throw TotalMismatch("profile total " + std::to_string(p.total()) +
                            " differs from constraint d = " + std::to_string(c.d));
    // Below the support the prefix is 0 <= C(t-1,2); above it the prefix is
    // d >= d - C(t,2); only support indices can fail.
    for (Int n = p.min_index(); n <= p.max_index(); ++n) {
        const Int value = p.at(n);
        const Int pre = p.prefix(n - 1);
        for (Int t = value + 1; t <= c.s; ++t) {
            if (!(pre <= binom2(t - 1) || pre >= c.d - binom2(t))) return false;
        }
    }
    return true;
}

bool admissible(const Profile& p, const PrStarStar& c) {
    if (c.r < 3) throw DomainError("PrStarStar requires r >= 3, got r = " + std::to_string(c.r));
    if (p.empty()) return true;
    for (Int n = p.min_index(); n <= p.max_index(); ++n) {
        if (p.at(n) < c.r - 1) {
            const Int before = p.prefix(n - 1);
            const Int after = p.total() - p.prefix(n);
            if (before != 0 && after != 0) return false;
        }
    }
    return true;
}

} // namespace

bool check_admissible(const Profile& p, const AdmissibilityConstraint& c) {
    return std::visit([&](const auto& k) { return admissible(p, k); }, c);
}

} // namespace halphen
