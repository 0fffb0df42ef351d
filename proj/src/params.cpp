#include "gsdf/params.hpp"

#include "gsdf/zv.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace gsdf {

namespace {

void require_odd(int v, const char* what)
{
    if (v < 1 || v % 2 == 0) throw Error(std::string(what) + " needs an odd order, got " + std::to_string(v));
}

int isqrt(int n)
{
    int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

GsParamSet from_sizes(int v, std::array<int, 4> k)
{
    std::sort(k.begin(), k.end(), std::greater<>());
    return GsParamSet{v, k, k[0] + k[1] + k[2] + k[3] - v};
}

} // namespace

bool GsParamSet::satisfies_lambda_equation() const
{
    long long lhs = 0;
    for (int ki : k) lhs += static_cast<long long>(ki) * (ki - 1);
    return lhs == static_cast<long long>(lambda) * (v - 1);
}

bool GsParamSet::satisfies_sum_equation() const { return k[0] + k[1] + k[2] + k[3] == lambda + v; }

bool GsParamSet::satisfies_square_equation() const
{
    long long lhs = 0;
    for (int ki : k) lhs += static_cast<long long>(v - 2 * ki) * (v - 2 * ki);
    return lhs == 4LL * v;
}

bool GsParamSet::is_normalized() const
{
    return 2 * k[0] <= v && k[0] >= k[1] && k[1] >= k[2] && k[2] >= k[3] && k[3] >= 0;
}

std::string GsParamSet::to_string() const
{
    return "(" + std::to_string(v) + ";" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + "," +
           std::to_string(k[3]) + ";" + std::to_string(lambda) + ")";
}

char tag_letter(BlockTag t)
{
    switch (t) {
    case BlockTag::skew: return 'k';
    case BlockTag::symmetric: return 's';
    case BlockTag::none: return '-';
    }
    return '?';
}

SymmetryType SymmetryType::parse(std::string_view text)
{
    if (text.size() != 4) throw Error("symmetry type must have four letters: '" + std::string(text) + "'");
    SymmetryType t;
    for (std::size_t i = 0; i < 4; ++i) {
        if (text[i] == 'k')
            t.tags[i] = BlockTag::skew;
        else if (text[i] == 's')
            t.tags[i] = BlockTag::symmetric;
        else
            throw Error("symmetry type letters are k or s: '" + std::string(text) + "'");
    }
    const int skews = t.skew_count();
    if (skews == 0) throw Error("type ssss is not supported");
    if (skews == 4) throw Error("type kkkk only exists for v = 1");
    return t;
}

int SymmetryType::skew_count() const
{
    return static_cast<int>(std::count(tags.begin(), tags.end(), BlockTag::skew));
}

std::string SymmetryType::to_string() const
{
    std::string s;
    for (auto t : tags) s += tag_letter(t);
    return s;
}

std::vector<GsParamSet> enumerate_param_sets(int v)
{
    if (v < 1) throw Error("order must be positive");
    std::vector<GsParamSet> out;
    const bool odd = (v % 2 == 1);
    const int target = odd ? 4 * v : v;
    const int step = odd ? 2 : 1;
    const int first = odd ? 1 : 0;
    const int top = isqrt(target);
    // s1 <= s2 <= s3 <= s4, each of the right parity.
    for (int s1 = first; s1 <= top; s1 += step)
        for (int s2 = s1; s1 * s1 + s2 * s2 <= target; s2 += step)
            for (int s3 = s2; s1 * s1 + s2 * s2 + s3 * s3 <= target; s3 += step) {
                const int rest = target - s1 * s1 - s2 * s2 - s3 * s3;
                const int s4 = isqrt(rest);
                if (s4 * s4 != rest || s4 < s3 || (odd && s4 % 2 == 0)) continue;
                std::array<int, 4> k{};
                const std::array<int, 4> s{s1, s2, s3, s4};
                bool ok = true;
                for (int i = 0; i < 4; ++i) {
                    k[i] = odd ? (v - s[i]) / 2 : v / 2 - s[i];
                    if (k[i] < 0) ok = false;
                }
                if (!ok) continue;
                auto p = from_sizes(v, k);
                if (p.is_valid()) out.push_back(p);
            }
    std::sort(out.begin(), out.end(), [](const GsParamSet& a, const GsParamSet& b) { return a.k > b.k; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<GsParamSet> skew_compatible_param_sets(int v)
{
    require_odd(v, "skew-compatible parameter enumeration");
    auto all = enumerate_param_sets(v);
    std::erase_if(all, [v](const GsParamSet& p) { return p.k[0] != (v - 1) / 2; });
    return all;
}

std::vector<GsParamSet> ksss_param_sets(int v)
{
    require_odd(v, "ksss parameter enumeration");
    // With k1 fixed: sum over i = 2..4 of (v - 2k_i)^2 = 4v - 1.
    const int half = (v - 1) / 2;
    std::vector<GsParamSet> out;
    for (int k2 = half; k2 >= 0; --k2)
        for (int k3 = k2; k3 >= 0; --k3)
            for (int k4 = k3; k4 >= 0; --k4) {
                const long long a = v - 2 * k2, b = v - 2 * k3, c = v - 2 * k4;
                if (a * a + b * b + c * c != 4LL * v - 1) continue;
                // v = 1 gives lambda = -1
                if (auto p = from_sizes(v, {half, k2, k3, k4}); p.lambda >= 0) out.push_back(p);
            }
    return out;
}

std::vector<GsParamSet> kkss_param_sets(int v)
{
    require_odd(v, "kkss parameter enumeration");
    const int half = (v - 1) / 2;
    std::vector<GsParamSet> out;
    const int n = 2 * v - 1;
    for (int r = 0; r * r <= n; ++r) {
        const int rest = n - r * r;
        const int s = isqrt(rest);
        if (s * s != rest || s >= r || v - r - 1 < 0) continue;
        out.push_back(GsParamSet{v, {half, half, (v - r + s) / 2, (v - r - s) / 2}, v - r - 1});
    }
    std::sort(out.begin(), out.end(), [](const GsParamSet& a, const GsParamSet& b) { return a.k > b.k; });
    return out;
}

std::optional<GsParamSet> kkks_param_set(int v)
{
    require_odd(v, "kkks parameter construction");
    const int n = 4 * v - 3;
    const int root = isqrt(n);
    if (root * root != n || root % 2 == 0) return std::nullopt;
    const int r = (root - 1) / 2;
    if (r < 1) return std::nullopt;
    return GsParamSet{v, {r * (r + 1) / 2, r * (r + 1) / 2, r * (r + 1) / 2, r * (r - 1) / 2}, r * r - 1};
}

bool type_fits(const GsParamSet& p, const SymmetryType& type)
{
    if (p.v % 2 == 0) return false;
    for (int i = 0; i < 4; ++i)
        if (type.tags[static_cast<std::size_t>(i)] == BlockTag::skew && p.k[static_cast<std::size_t>(i)] != (p.v - 1) / 2) return false;
    return true;
}

std::vector<GsParamSet> param_sets_for_type(int v, const SymmetryType& type)
{
    auto all = skew_compatible_param_sets(v);
    std::erase_if(all, [&](const GsParamSet& p) { return !type_fits(p, type); });
    return all;
}

GsParamSet complement_params(const GsParamSet& p, int index)
{
    if (index < 0 || index > 3) throw Error("block index must be 0..3");
    GsParamSet q = p;
    auto& ki = q.k[static_cast<std::size_t>(index)];
    q.lambda = p.lambda + (p.v - 2 * ki);
    ki = p.v - ki;
    return q;
}

GsParamSet normalize(const GsParamSet& p)
{
    GsParamSet q = p;
    for (int i = 0; i < 4; ++i)
        if (2 * q.k[static_cast<std::size_t>(i)] > q.v) q = complement_params(q, i);
    std::sort(q.k.begin(), q.k.end(), std::greater<>());
    return q;
}

} // namespace gsdf
