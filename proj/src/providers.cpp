#include "logdegen/providers.hpp"

#include <algorithm>

namespace logdegen {

namespace {

struct NormItem {
    Vec sort_key;  // (m-or-w, basis index)
    int degree;
};

// Stable sort by key; the returned sign is the Koszul sign of the
// permutation (odd-odd inversions removed by the sort).
int sort_sign(std::vector<NormItem>& items) {
    long inversions = 0;
    for (size_t i = 0; i < items.size(); ++i)
        for (size_t j = i + 1; j < items.size(); ++j)
            if (lex_less(items[j].sort_key, items[i].sort_key) && items[i].degree % 2 != 0 &&
                items[j].degree % 2 != 0)
                ++inversions;
    std::stable_sort(items.begin(), items.end(), [](const NormItem& a, const NormItem& b) {
        return lex_less(a.sort_key, b.sort_key);
    });
    return inversions % 2 == 0 ? 1 : -1;
}

std::pair<std::vector<Int>, int> canonical_key(const TargetModel& t, int r, int g, const Vec& beta,
                                               std::vector<std::pair<int, int>> absolute,
                                               std::vector<std::pair<Int, int>> relative) {
    std::vector<NormItem> abs_items, rel_items;
    for (const auto& [m, idx] : absolute)
        abs_items.push_back({{Int(m), Int(idx)}, t.side(r).cohomology.degrees[idx]});
    for (const auto& [w, idx] : relative)
        rel_items.push_back({{w, Int(idx)}, t.d_cohomology.degrees[idx]});
    int sign = sort_sign(abs_items) * sort_sign(rel_items);
    std::vector<Int> key{Int(r), Int(g)};
    for (const auto& x : beta) key.push_back(x);
    key.push_back(Int(-1));
    for (const auto& it : abs_items) {
        key.push_back(it.sort_key[0]);
        key.push_back(it.sort_key[1]);
    }
    key.push_back(Int(-2));
    for (const auto& it : rel_items) {
        key.push_back(it.sort_key[0]);
        key.push_back(it.sort_key[1]);
    }
    return {key, sign};
}

}  // namespace

TableProvider::TableProvider(const TargetModel& t, const std::vector<InvariantRecord>& records) {
    for (const auto& rec : records) {
        if (rec.r != 1 && rec.r != 2) throw validation_error("table: bad component index");
        if (static_cast<int>(rec.beta.size()) != t.side(rec.r).class_rank())
            throw validation_error("table: class rank mismatch");
        Int wsum = 0;
        for (const auto& [w, idx] : rec.relative) {
            if (w < 1) throw validation_error("table: nonpositive contact order");
            if (idx < 0 || idx >= static_cast<int>(t.d_cohomology.size()))
                throw validation_error("table: relative basis index out of range");
            wsum += w;
        }
        if (wsum != t.d_deg(rec.r, rec.beta))
            throw validation_error("table: contact orders do not match the class degree");
        for (const auto& [m, idx] : rec.absolute)
            if (m < 0 || idx < 0 || idx >= static_cast<int>(t.side(rec.r).cohomology.size()))
                throw validation_error("table: absolute insertion out of range");
        auto [key, sign] = canonical_key(t, rec.r, rec.g, rec.beta, rec.absolute, rec.relative);
        Rat v = Rat(sign) * rec.value;
        v.canonicalize();
        auto [it, inserted] = table_.emplace(key, v);
        if (!inserted && it->second != v)
            throw validation_error("table: contradictory duplicate records");
    }
}

std::optional<Rat> TableProvider::lookup(const TargetModel& t, const CorrelatorQuery& q) const {
    // expand multilinearly over the supports of all inserted classes
    size_t na = q.absolute.size(), nr = q.relative.size();
    std::vector<std::vector<std::pair<int, Rat>>> abs_support(na), rel_support(nr);
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < q.absolute[i].cls.coeffs.size(); ++j)
            if (q.absolute[i].cls.coeffs[j] != 0)
                abs_support[i].push_back({static_cast<int>(j), q.absolute[i].cls.coeffs[j]});
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < q.relative[i].cls.coeffs.size(); ++j)
            if (q.relative[i].cls.coeffs[j] != 0)
                rel_support[i].push_back({static_cast<int>(j), q.relative[i].cls.coeffs[j]});
    for (const auto& s : abs_support)
        if (s.empty()) return Rat(0);
    for (const auto& s : rel_support)
        if (s.empty()) return Rat(0);

    Rat total = 0;
    std::vector<size_t> pick(na + nr, 0);
    while (true) {
        Rat coeff = 1;
        std::vector<std::pair<int, int>> absolute;
        std::vector<std::pair<Int, int>> relative;
        for (size_t i = 0; i < na; ++i) {
            const auto& [idx, c] = abs_support[i][pick[i]];
            coeff *= c;
            absolute.push_back({q.absolute[i].m, idx});
        }
        for (size_t i = 0; i < nr; ++i) {
            const auto& [idx, c] = rel_support[i][pick[na + i]];
            coeff *= c;
            relative.push_back({q.relative[i].w, idx});
        }
        auto [key, sign] = canonical_key(t, q.r, q.g, q.beta, absolute, relative);
        auto it = table_.find(key);
        if (it == table_.end()) return std::nullopt;
        total += coeff * Rat(sign) * it->second;

        size_t i = 0;
        auto limit = [&](size_t k) { return k < na ? abs_support[k].size() : rel_support[k - na].size(); };
        while (i < pick.size() && ++pick[i] == limit(i)) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    total.canonicalize();
    return total;
}

}  // namespace logdegen
