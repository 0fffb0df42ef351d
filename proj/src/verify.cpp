#include "gsdf/verify.hpp"

#include <ostream>

namespace gsdf {

namespace {

void require_tags(const TypedFamily& f, const SymmetryType& expected, const char* what)
{
    if (f.tags != expected.tags)
        throw Error(std::string(what) + " need tags " + expected.to_string() + ", family has " +
                    std::string{tag_letter(f.tags[0]), tag_letter(f.tags[1]), tag_letter(f.tags[2]), tag_letter(f.tags[3])});
}

void require_same_size(const IntMatrix& a, const IntMatrix& b)
{
    if (a.size() != b.size()) throw Error("matrix dimension mismatch");
}

} // namespace

IntMatrix IntMatrix::identity(int n, int scale)
{
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = scale;
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    require_same_size(*this, rhs);
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int l = 0; l < n_; ++l) {
            const int a = (*this)(i, l);
            if (a == 0) continue;
            for (int j = 0; j < n_; ++j) out(i, j) += a * rhs(l, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const
{
    require_same_size(*this, rhs);
    IntMatrix out(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
    return out;
}

IntMatrix IntMatrix::operator-() const
{
    IntMatrix out(*this);
    for (auto& x : out.a_) x = -x;
    return out;
}

bool IntMatrix::is_plus_minus_one() const
{
    for (int x : a_)
        if (x != 1 && x != -1) return false;
    return true;
}

IntMatrix circulant(const BinarySeq& first_row)
{
    const int v = first_row.v;
    IntMatrix m(v);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) m(i, j) = first_row.entries[static_cast<std::size_t>(mod(j - i, v))];
    return m;
}

IntMatrix back_circulant(const BinarySeq& first_row)
{
    const int v = first_row.v;
    IntMatrix m(v);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) m(i, j) = first_row.entries[static_cast<std::size_t>((i + j) % v)];
    return m;
}

IntMatrix back_circulant(const CyclicSubset& x)
{
    // First row of circulant(x) * R is x read backwards.
    const auto seq = BinarySeq::from_subset(x);
    BinarySeq row = seq;
    for (int m = 0; m < seq.v; ++m) row.entries[static_cast<std::size_t>(m)] = seq.entries[static_cast<std::size_t>(seq.v - 1 - m)];
    return back_circulant(row);
}

IntMatrix back_identity(int v)
{
    IntMatrix r(v);
    for (int i = 0; i < v; ++i) r(i, v - 1 - i) = 1;
    return r;
}

DifferenceFamilyReport is_difference_family(const TypedFamily& f)
{
    const int v = f.order();
    DifferenceFamilyReport report;
    report.sums.assign(static_cast<std::size_t>(v), 0);
    for (const auto& b : f.blocks)
        for (int a : b.elements())
            for (int c : b.elements())
                if (a != c) ++report.sums[static_cast<std::size_t>(mod(a - c, v))];
    bool constant = true;
    for (int c = 1; c < v; ++c) {
        if (report.sums[static_cast<std::size_t>(c)] != report.sums[1]) constant = false;
        if (report.sums[static_cast<std::size_t>(c)] != f.params.lambda) report.offending.push_back(c);
    }
    if (constant) report.lambda = (v > 1) ? report.sums[1] : f.params.lambda;
    return report;
}

std::array<IntMatrix, 4> family_circulants(const TypedFamily& f)
{
    return {circulant(f.blocks[0]), circulant(f.blocks[1]), circulant(f.blocks[2]), circulant(f.blocks[3])};
}

bool check_gs_matrices(const std::array<IntMatrix, 4>& a)
{
    const int v = a[0].size();
    IntMatrix sum(v);
    for (const auto& m : a) {
        require_same_size(m, a[0]);
        if (!m.is_plus_minus_one()) return false;
        sum = sum + m.transpose() * m;
    }
    return sum == IntMatrix::identity(v, 4 * v);
}

IntMatrix build_gs_array(const std::array<IntMatrix, 4>& z)
{
    const int v = z[0].size();
    for (const auto& m : z) require_same_size(m, z[0]);
    const auto r = back_identity(v);
    const auto z1r = z[1] * r, z2r = z[2] * r, z3r = z[3] * r;
    const auto z1tr = z[1].transpose() * r, z2tr = z[2].transpose() * r, z3tr = z[3].transpose() * r;
    // Block layout:
    //   Z0      Z1R     Z2R     Z3R
    //  -Z1R     Z0     -Z3^TR   Z2^TR
    //  -Z2R     Z3^TR   Z0     -Z1^TR
    //  -Z3R    -Z2^TR   Z1^TR   Z0
    const std::array<std::array<IntMatrix, 4>, 4> layout{{
        {z[0], z1r, z2r, z3r},
        {-z1r, z[0], -z3tr, z2tr},
        {-z2r, z3tr, z[0], -z1tr},
        {-z3r, -z2tr, z1tr, z[0]},
    }};
    IntMatrix h(4 * v);
    for (int bi = 0; bi < 4; ++bi)
        for (int bj = 0; bj < 4; ++bj) {
            const auto& blk = layout[static_cast<std::size_t>(bi)][static_cast<std::size_t>(bj)];
            for (int i = 0; i < v; ++i)
                for (int j = 0; j < v; ++j) h(bi * v + i, bj * v + j) = blk(i, j);
        }
    return h;
}

bool is_hadamard(const IntMatrix& h)
{
    return h.is_plus_minus_one() && h * h.transpose() == IntMatrix::identity(h.size(), h.size());
}

bool is_skew_hadamard(const IntMatrix& h) { return is_hadamard(h) && h + h.transpose() == IntMatrix::identity(h.size(), 2); }

bool are_good_matrices(const std::array<IntMatrix, 4>& m)
{
    const int v = m[0].size();
    for (const auto& x : m) {
        require_same_size(x, m[0]);
        if (!x.is_plus_minus_one()) return false;
    }
    if (!(m[0] + m[0].transpose() == IntMatrix::identity(v, 2))) return false;
    for (std::size_t i = 1; i < 4; ++i)
        if (!m[i].is_symmetric()) return false;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (!(m[i] * m[j].transpose() == m[j] * m[i].transpose())) return false;
    IntMatrix sum(v);
    for (const auto& x : m) sum = sum + x * x.transpose();
    return sum == IntMatrix::identity(v, 4 * v);
}

bool check_good_matrices(const TypedFamily& f)
{
    require_tags(f, SymmetryType::ksss(), "good matrices");
    const auto r = back_identity(f.order());
    return are_good_matrices({circulant(f.blocks[0]), circulant(f.blocks[1]) * r, circulant(f.blocks[2]) * r, circulant(f.blocks[3]) * r});
}

bool check_g_matrices(const TypedFamily& f)
{
    require_tags(f, SymmetryType::kkss(), "G-matrices");
    return check_gs_matrices(family_circulants(f));
}

bool check_best_matrices(const TypedFamily& f)
{
    require_tags(f, SymmetryType::kkks(), "best matrices");
    return check_gs_matrices(family_circulants(f));
}

Certificate certify(const TypedFamily& f)
{
    Certificate c;
    const auto df = is_difference_family(f);
    c.difference_family = df.ok() && df.offending.empty();
    const auto z = family_circulants(f);
    c.gs_matrices = check_gs_matrices(z);
    const auto h = build_gs_array(z);
    c.hadamard = is_hadamard(h);
    if (f.tags[0] == BlockTag::skew) c.skew_hadamard = is_skew_hadamard(h);
    if (f.tags == SymmetryType::ksss().tags)
        c.typed_matrices = check_good_matrices(f);
    else if (f.tags == SymmetryType::kkss().tags)
        c.typed_matrices = check_g_matrices(f);
    else if (f.tags == SymmetryType::kkks().tags)
        c.typed_matrices = check_best_matrices(f);
    return c;
}

void write_hadamard(std::ostream& out, const IntMatrix& h)
{
    std::string line;
    for (int i = 0; i < h.size(); ++i) {
        line.clear();
        for (int j = 0; j < h.size(); ++j) line += h(i, j) > 0 ? '+' : '-';
        out << line << '\n';
    }
}

} // namespace gsdf
