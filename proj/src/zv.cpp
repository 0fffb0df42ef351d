#include "gsdf/zv.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace gsdf {

namespace {

void check_order(int v)
{
    if (v < 1 || v > max_order)
        throw Error("group order " + std::to_string(v) + " outside [1, " + std::to_string(max_order) + "]");
}

std::uint64_t full_mask(int v) { return (v == 64) ? ~0ULL : ((1ULL << v) - 1); }

} // namespace

int gcd(int a, int b) { return std::gcd(a, b); }

int inverse_mod(int u, int v)
{
    u = mod(u, v);
    if (std::gcd(u, v) != 1) throw Error("multiplier " + std::to_string(u) + " is not a unit modulo " + std::to_string(v));
    // Extended Euclid.
    long long r0 = v, r1 = u, t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    return mod(t0, v);
}

std::vector<int> units(int v)
{
    if (v == 1) return {0};
    std::vector<int> out;
    for (int u = 1; u < v; ++u)
        if (std::gcd(u, v) == 1) out.push_back(u);
    return out;
}

CyclicSubset::CyclicSubset(int v) : v_(v), mask_(0) { check_order(v); }

CyclicSubset CyclicSubset::from_mask(int v, std::uint64_t mask)
{
    check_order(v);
    if (mask & ~full_mask(v)) throw Error("mask has bits outside Z_" + std::to_string(v));
    return CyclicSubset(v, mask);
}

CyclicSubset CyclicSubset::from_elements(int v, std::span<const int> elements)
{
    check_order(v);
    std::uint64_t m = 0;
    for (int e : elements) {
        if (e < 0 || e >= v) throw Error("residue " + std::to_string(e) + " outside [0, " + std::to_string(v) + ")");
        if ((m >> e) & 1U) throw Error("duplicate residue " + std::to_string(e));
        m |= 1ULL << e;
    }
    return CyclicSubset(v, m);
}

CyclicSubset CyclicSubset::full(int v)
{
    check_order(v);
    return CyclicSubset(v, full_mask(v));
}

std::vector<int> CyclicSubset::elements() const
{
    std::vector<int> out;
    out.reserve(cardinality());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

std::string CyclicSubset::to_string() const
{
    std::string s;
    for (int e : elements()) {
        if (!s.empty()) s += ',';
        s += std::to_string(e);
    }
    return s;
}

std::strong_ordering lex_compare(const CyclicSubset& a, const CyclicSubset& b)
{
    if (a.cardinality() == b.cardinality()) {
        // Equal sizes: the set owning the lowest differing residue is smaller.
        const std::uint64_t diff = a.mask() ^ b.mask();
        if (diff == 0) return std::strong_ordering::equal;
        const std::uint64_t low = diff & (~diff + 1);
        return (a.mask() & low) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    const auto ea = a.elements();
    const auto eb = b.elements();
    return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

BinarySeq BinarySeq::from_subset(const CyclicSubset& x)
{
    BinarySeq s;
    s.v = x.order();
    s.entries.assign(static_cast<std::size_t>(s.v), 1);
    for (int e : x.elements()) s.entries[static_cast<std::size_t>(e)] = -1;
    return s;
}

CyclicSubset BinarySeq::to_subset() const
{
    if (static_cast<int>(entries.size()) != v) throw Error("binary sequence length does not match its order");
    std::vector<int> elems;
    for (int i = 0; i < v; ++i) {
        const int e = entries[static_cast<std::size_t>(i)];
        if (e == -1)
            elems.push_back(i);
        else if (e != 1)
            throw Error("binary sequence entry is not +1 or -1");
    }
    return CyclicSubset::from_elements(v, elems);
}

CyclicSubset negate(const CyclicSubset& x)
{
    const int v = x.order();
    std::uint64_t m = x.mask() & 1U;
    for (std::uint64_t rest = x.mask() & ~1ULL; rest != 0; rest &= rest - 1) m |= 1ULL << (v - std::countr_zero(rest));
    return CyclicSubset::from_mask(v, m);
}

CyclicSubset translate(const CyclicSubset& x, int g)
{
    const int v = x.order();
    return CyclicSubset::from_mask(v, rotate_mask(x.mask(), v, mod(g, v)));
}

CyclicSubset dilate(const CyclicSubset& x, int u)
{
    const int v = x.order();
    if (std::gcd(mod(u, v), v) != 1) throw Error("multiplier " + std::to_string(u) + " is not a unit modulo " + std::to_string(v));
    std::uint64_t m = 0;
    for (int e : x.elements()) m |= 1ULL << mod(static_cast<long long>(u) * e, v);
    return CyclicSubset::from_mask(v, m);
}

CyclicSubset complement(const CyclicSubset& x)
{
    return CyclicSubset::from_mask(x.order(), ~x.mask() & full_mask(x.order()));
}

bool is_symmetric(const CyclicSubset& x) { return negate(x) == x; }

bool is_skew(const CyclicSubset& x)
{
    const int v = x.order();
    if (v % 2 == 0 || x.cardinality() != (v - 1) / 2) return false;
    return (negate(x).mask() & x.mask()) == 0;
}

bool is_periodic(const CyclicSubset& x)
{
    const int v = x.order();
    // A period must divide v, so proper divisors suffice.
    for (int h = 1; h < v; ++h)
        if (v % h == 0 && rotate_mask(x.mask(), v, h) == x.mask()) return true;
    return false;
}

int intersection_count(const CyclicSubset& x, int s)
{
    const int v = x.order();
    return std::popcount(x.mask() & rotate_mask(x.mask(), v, mod(s, v)));
}

DifferenceRow difference_row(const CyclicSubset& x)
{
    const int v = x.order();
    if (v % 2 == 0) throw Error("difference rows need odd v, got " + std::to_string(v));
    DifferenceRow row;
    row.v = v;
    row.counts.resize(static_cast<std::size_t>((v - 1) / 2));
    for (int d = 1; d <= (v - 1) / 2; ++d) row.counts[static_cast<std::size_t>(d - 1)] = intersection_count(x, d);
    return row;
}

std::vector<int> paf(const CyclicSubset& x)
{
    const int v = x.order();
    const int k = x.cardinality();
    std::vector<int> out(static_cast<std::size_t>(v));
    for (int s = 0; s < v; ++s) out[static_cast<std::size_t>(s)] = v - 4 * k + 4 * intersection_count(x, s);
    return out;
}

PsdTable::PsdTable(int v) : v_(v), cosines_(static_cast<std::size_t>(v) * static_cast<std::size_t>(v))
{
    check_order(v);
    for (int j = 0; j < v; ++j)
        for (int s = 0; s < v; ++s) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((static_cast<long long>(s) * j) % v) / v;
            cosines_[static_cast<std::size_t>(j * v + s)] = std::cos(angle);
        }
}

std::vector<double> PsdTable::evaluate(const CyclicSubset& x) const
{
    const auto a = paf(x);
    std::vector<double> out(static_cast<std::size_t>(v_));
    for (int j = 0; j < v_; ++j) {
        double sum = 0.0;
        for (int s = 0; s < v_; ++s) sum += a[static_cast<std::size_t>(s)] * cosines_[static_cast<std::size_t>(j * v_ + s)];
        out[static_cast<std::size_t>(j)] = sum;
    }
    return out;
}

double PsdTable::max_nonzero_frequency(const CyclicSubset& x) const
{
    // PAF(s) = PAF(v-s) and PSD(j) = PSD(v-j): half of each range suffices.
    const int half = (v_ - 1) / 2;
    const int k = x.cardinality();
    int a[max_order + 1];
    for (int s = 1; s <= v_ / 2; ++s) a[s] = v_ - 4 * k + 4 * intersection_count(x, s);
    double best = 0.0;
    for (int j = 1; j <= v_ / 2; ++j) {
        const double* row = &cosines_[static_cast<std::size_t>(j * v_)];
        double sum = v_;
        for (int s = 1; s <= half; ++s) sum += 2.0 * a[s] * row[s];
        if (v_ % 2 == 0) sum += a[v_ / 2] * row[v_ / 2];
        best = std::max(best, sum);
    }
    return best;
}

std::vector<double> psd(const CyclicSubset& x) { return PsdTable(x.order()).evaluate(x); }

} // namespace gsdf
