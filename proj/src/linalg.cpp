#include "toricbunch/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace toric {

namespace {

// Extended gcd: returns (g, s, t) with g = s*a + t*b, g >= 0.
std::tuple<Int, Int, Int> xgcd(const Int& a, const Int& b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

// row_i <- row_i - q * row_k
void row_axpy(IntMatrix& m, std::size_t i, std::size_t k, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= q * m.at(k, j);
}

// Combine rows r and i so that column c gets (gcd, 0); mirrored on u.
void row_gcd_step(IntMatrix& h, IntMatrix& u, std::size_t r, std::size_t i, std::size_t c) {
    const Int a = h.at(r, c), b = h.at(i, c);
    if (b == 0) return;
    if (a == 0) { h.swap_rows(r, i); u.swap_rows(r, i); return; }
    if (b % a == 0) { Int q = b / a; row_axpy(h, i, r, q); row_axpy(u, i, r, q); return; }
    auto [g, s, t] = xgcd(a, b);
    const Int ag = a / g, bg = b / g;
    for (std::size_t j = 0; j < h.cols(); ++j) {
        Int hr = h.at(r, j), hi = h.at(i, j);
        h.at(r, j) = s * hr + t * hi;
        h.at(i, j) = -bg * hr + ag * hi;
    }
    for (std::size_t j = 0; j < u.cols(); ++j) {
        Int ur = u.at(r, j), ui = u.at(i, j);
        u.at(r, j) = s * ur + t * ui;
        u.at(i, j) = -bg * ur + ag * ui;
    }
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(rows);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        for (std::size_t i = r + 1; i < rows; ++i) row_gcd_step(h, u, r, i, c);
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) { negate_row(h, r); negate_row(u, r); }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, c), h.at(r, c));
            row_axpy(h, i, r, q);
            row_axpy(u, i, r, q);
        }
        ++r;
    }
    return {h, u};
}

SnfResult snf(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix s = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    auto col_gcd_step = [&](std::size_t c, std::size_t j, std::size_t r) {
        const Int a = s.at(r, c), b = s.at(r, j);
        if (b == 0) return;
        if (a == 0) { s.swap_cols(c, j); v.swap_cols(c, j); return; }
        if (b % a == 0) {
            Int q = b / a;
            for (std::size_t i = 0; i < rows; ++i) s.at(i, j) -= q * s.at(i, c);
            for (std::size_t i = 0; i < cols; ++i) v.at(i, j) -= q * v.at(i, c);
            return;
        }
        auto [g, p, q] = xgcd(a, b);
        const Int ag = a / g, bg = b / g;
        for (std::size_t i = 0; i < rows; ++i) {
            Int sc = s.at(i, c), sj = s.at(i, j);
            s.at(i, c) = p * sc + q * sj;
            s.at(i, j) = -bg * sc + ag * sj;
        }
        for (std::size_t i = 0; i < cols; ++i) {
            Int vc = v.at(i, c), vj = v.at(i, j);
            v.at(i, c) = p * vc + q * vj;
            v.at(i, j) = -bg * vc + ag * vj;
        }
    };

    const std::size_t t = std::min(rows, cols);
    for (std::size_t k = 0; k < t; ++k) {
        // Pull a nonzero entry into (k, k) if one remains.
        std::size_t pi = k, pj = k;
        bool found = false;
        for (std::size_t i = k; i < rows && !found; ++i)
            for (std::size_t j = k; j < cols && !found; ++j)
                if (s.at(i, j) != 0) { pi = i; pj = j; found = true; }
        if (!found) break;
        if (pi != k) { s.swap_rows(k, pi); u.swap_rows(k, pi); }
        if (pj != k) { s.swap_cols(k, pj); v.swap_cols(k, pj); }

        // Alternate row and column elimination until both are clear.
        while (true) {
            for (std::size_t i = k + 1; i < rows; ++i) row_gcd_step(s, u, k, i, k);
            for (std::size_t j = k + 1; j < cols; ++j) col_gcd_step(k, j, k);
            bool clean = true;
            for (std::size_t i = k + 1; i < rows && clean; ++i)
                if (s.at(i, k) != 0) clean = false;
            if (clean) break;
        }
        if (s.at(k, k) < 0) { negate_row(s, k); negate_row(u, k); }
    }

    // Enforce the divisibility chain d_k | d_{k+1}.  Folding column j into
    // column k puts d_j below the pivot; one gcd row step plus one exact
    // column elimination restores diagonal shape with (gcd, lcm).
    for (std::size_t k = 0; k + 1 < t; ++k) {
        if (s.at(k, k) == 0) break;
        for (std::size_t j = k + 1; j < t; ++j) {
            if (s.at(j, j) % s.at(k, k) == 0) continue;
            for (std::size_t i = 0; i < rows; ++i) s.at(i, k) += s.at(i, j);
            for (std::size_t i = 0; i < cols; ++i) v.at(i, k) += v.at(i, j);
            row_gcd_step(s, u, k, j, k);
            Int q = s.at(k, j) / s.at(k, k);
            for (std::size_t i = 0; i < rows; ++i) s.at(i, j) -= q * s.at(i, k);
            for (std::size_t i = 0; i < cols; ++i) v.at(i, j) -= q * v.at(i, k);
            if (s.at(j, j) < 0) { negate_row(s, j); negate_row(u, j); }
        }
    }
    return {s, u, v};
}

std::vector<Int> elementary_divisors(const IntMatrix& m) {
    SnfResult r = snf(m);
    std::vector<Int> d;
    const std::size_t t = std::min(m.rows(), m.cols());
    for (std::size_t k = 0; k < t; ++k)
        if (r.s.at(k, k) != 0) d.push_back(r.s.at(k, k));
    return d;
}

std::size_t rank(const IntMatrix& m) {
    HnfResult r = hnf(m);
    std::size_t rk = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (r.h.at(i, j) != 0) { nonzero = true; break; }
        if (nonzero) ++rk;
    }
    return rk;
}

IntMatrix rows_to_int_matrix(const std::vector<RatVector>& rows, std::size_t ambient) {
    std::vector<IntVector> cleared;
    cleared.reserve(rows.size());
    for (const RatVector& r : rows) {
        if (r.size() != ambient) throw std::invalid_argument("ambient mismatch");
        Int l = 1;
        for (const Rat& x : r) l = int_lcm(l, rat_den(x));
        IntVector w(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = rat_num(r[i]) * (l / rat_den(r[i]));
        cleared.push_back(std::move(w));
    }
    return IntMatrix::from_rows(cleared, ambient);
}

std::size_t rank(const std::vector<RatVector>& rows) {
    if (rows.empty()) return 0;
    return rank(rows_to_int_matrix(rows, rows.front().size()));
}

Sublattice kernel_basis(const IntMatrix& m) {
    // Row-reduce the transpose: zero rows of H = U * m^T give left-kernel
    // rows of m^T, i.e. the right kernel of m.  That kernel is saturated by
    // construction; re-HNF for the canonical basis.
    const IntMatrix mt = m.transpose();
    HnfResult r = hnf(mt);
    std::vector<IntVector> ker;
    for (std::size_t i = 0; i < mt.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < mt.cols(); ++j)
            if (r.h.at(i, j) != 0) { zero = false; break; }
        if (zero) ker.push_back(r.u.row(i));
    }
    IntMatrix kb = IntMatrix::from_rows(ker, m.cols());
    return Sublattice{m.cols(), hnf(kb).h};
}

bool is_surjective(const IntMatrix& m) {
    std::vector<Int> d = elementary_divisors(m);
    if (d.size() != m.rows()) return false;
    for (const Int& x : d)
        if (x != 1) return false;
    return true;
}

Sublattice lattice_from_rows(const std::vector<IntVector>& rows, std::size_t ambient) {
    IntMatrix m = IntMatrix::from_rows(rows, ambient);
    IntMatrix h = hnf(m).h;
    std::vector<IntVector> nz;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h.at(i, j) != 0) { zero = false; break; }
        if (!zero) nz.push_back(h.row(i));
    }
    return Sublattice{ambient, IntMatrix::from_rows(nz, ambient)};
}

Sublattice annihilator(const std::vector<RatVector>& rows, std::size_t ambient) {
    if (rows.empty()) return Sublattice{ambient, IntMatrix::identity(ambient)};
    return kernel_basis(rows_to_int_matrix(rows, ambient));
}

Sublattice saturate(const Sublattice& s) {
    // Double annihilator: (lin s)^perp, then its integer kernel again.
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < s.basis.rows(); ++i) rows.push_back(rat_vector(s.basis.row(i)));
    Sublattice ann = annihilator(rows, s.ambient);
    return kernel_basis(ann.basis);
}

bool is_primitive(const Sublattice& s) {
    Sublattice canon = lattice_from_rows([&] {
        std::vector<IntVector> rows;
        for (std::size_t i = 0; i < s.basis.rows(); ++i) rows.push_back(s.basis.row(i));
        return rows;
    }(), s.ambient);
    return saturate(s) == canon;
}

Int saturation_index(const Sublattice& s) {
    std::vector<Int> d = elementary_divisors(s.basis);
    Int idx = 1;
    for (const Int& x : d) idx *= x;
    return idx;
}

std::vector<RatVector> subspace_intersection(const std::vector<std::vector<RatVector>>& spaces,
                                             std::size_t ambient) {
    // Intersect by stacking annihilators and taking the kernel once.
    std::vector<IntVector> ann_rows;
    for (const auto& space : spaces) {
        Sublattice a = annihilator(space, ambient);
        for (std::size_t i = 0; i < a.basis.rows(); ++i) ann_rows.push_back(a.basis.row(i));
    }
    if (ann_rows.empty()) {
        std::vector<RatVector> full;
        for (std::size_t i = 0; i < ambient; ++i) {
            RatVector e(ambient, Rat(0));
            e[i] = 1;
            full.push_back(e);
        }
        return full;
    }
    Sublattice k = kernel_basis(IntMatrix::from_rows(ann_rows, ambient));
    std::vector<RatVector> result;
    for (std::size_t i = 0; i < k.basis.rows(); ++i) result.push_back(rat_vector(k.basis.row(i)));
    return result;
}

Sublattice lattice_intersection(const std::vector<Sublattice>& lattices, std::size_t ambient) {
    if (lattices.empty()) return Sublattice{ambient, IntMatrix::identity(ambient)};
    Sublattice acc = lattices.front();
    for (std::size_t li = 1; li < lattices.size(); ++li) {
        const Sublattice& other = lattices[li];
        if (other.ambient != ambient || acc.ambient != ambient)
            throw std::invalid_argument("ambient mismatch");
        // Left kernel of [B1; -B2]: pairs (a, b) with a*B1 = b*B2 sweep out
        // exactly the intersection lattice.
        const std::size_t r1 = acc.basis.rows(), r2 = other.basis.rows();
        std::vector<IntVector> stacked;
        for (std::size_t i = 0; i < r1; ++i) stacked.push_back(acc.basis.row(i));
        for (std::size_t i = 0; i < r2; ++i) {
            IntVector row = other.basis.row(i);
            for (Int& x : row) x = -x;
            stacked.push_back(row);
        }
        IntMatrix st = IntMatrix::from_rows(stacked, ambient);
        Sublattice pairs = kernel_basis(st.transpose());
        std::vector<IntVector> vecs;
        for (std::size_t i = 0; i < pairs.basis.rows(); ++i) {
            IntVector ab = pairs.basis.row(i);
            IntVector v(ambient, Int(0));
            for (std::size_t a = 0; a < r1; ++a)
                for (std::size_t j = 0; j < ambient; ++j) v[j] += ab[a] * acc.basis.at(a, j);
            vecs.push_back(std::move(v));
        }
        acc = lattice_from_rows(vecs, ambient);
    }
    return acc;
}

bool subspace_contains(const std::vector<RatVector>& basis, const RatVector& v) {
    if (is_zero(v)) return true;
    if (basis.empty()) return false;
    std::size_t r0 = rank(basis);
    std::vector<RatVector> ext = basis;
    ext.push_back(v);
    return rank(ext) == r0;
}

bool lattice_contains(const Sublattice& s, const IntVector& v) {
    // Solve x * basis = v over the integers via the HNF of the basis.
    HnfResult r = hnf(s.basis);
    IntVector rem = v;
    for (std::size_t i = 0; i < r.h.rows(); ++i) {
        std::size_t p = 0;
        while (p < s.ambient && r.h.at(i, p) == 0) ++p;
        if (p == s.ambient) continue;
        if (rem[p] % r.h.at(i, p) != 0) return false;
        Int q = rem[p] / r.h.at(i, p);
        for (std::size_t j = 0; j < s.ambient; ++j) rem[j] -= q * r.h.at(i, j);
    }
    for (const Int& x : rem)
        if (x != 0) return false;
    return true;
}

std::optional<RatVector> solve_rational(const IntMatrix& m, const RatVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("dimension mismatch");
    const std::size_t rows = m.rows(), cols = m.cols();
    // Rational Gaussian elimination on the augmented system.
    std::vector<RatVector> a(rows, RatVector(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rat(m.at(i, j));
        a[i][cols] = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rat inv = a[r][c];
        for (std::size_t j = c; j <= cols; ++j) a[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (a[i][cols] != 0) return std::nullopt;
    RatVector x(cols, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a[i][cols];
    return x;
}

std::optional<IntVector> solve_integral(const IntMatrix& m, const IntVector& b) {
    // Solve m x = b over Z via the HNF of m^T: with H = U m^T, a solution
    // needs y with H^T y = b supported on the pivot rows of H.
    HnfResult r = hnf(m.transpose());
    const std::size_t n = m.cols();
    IntVector y(n, Int(0));
    IntVector rem = b;
    for (std::size_t i = 0; i < r.h.rows(); ++i) {
        std::size_t p = 0;
        while (p < r.h.cols() && r.h.at(i, p) == 0) ++p;
        if (p == r.h.cols()) continue;
        if (rem[p] % r.h.at(i, p) != 0) return std::nullopt;
        Int q = rem[p] / r.h.at(i, p);
        y[i] = q;
        for (std::size_t j = 0; j < r.h.cols(); ++j) rem[j] -= q * r.h.at(i, j);
    }
    for (const Int& x : rem)
        if (x != 0) return std::nullopt;
    // x = U^T y.
    IntVector x(n, Int(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) x[j] += r.u.at(i, j) * y[i];
    return x;
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev;
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

}  // namespace toric
