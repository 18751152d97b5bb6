#pragma once

#include <optional>
#include <random>

#include "complen/gf.hpp"
#include "complen/group.hpp"

namespace complen {

// Dense matrix over a shared Field, row-major.  Vectors are rows and act on
// the right: v -> v * M, matching the left-to-right permutation convention.
class Mat {
  public:
    Mat(const Field& F, unsigned rows, unsigned cols) : F_(&F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Mat identity(const Field& F, unsigned n) {
        Mat m(F, n, n);
        for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    const Field& field() const { return *F_; }
    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    std::uint8_t& at(unsigned i, unsigned j) { return a_[i * cols_ + j]; }
    std::uint8_t at(unsigned i, unsigned j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch");
        Mat r(*F_, rows_, o.cols_);
        for (unsigned i = 0; i < rows_; ++i)
            for (unsigned k = 0; k < cols_; ++k) {
                std::uint8_t aik = at(i, k);
                if (aik == 0) continue;
                for (unsigned j = 0; j < o.cols_; ++j)
                    r.at(i, j) = F_->add(r.at(i, j), F_->mul(aik, o.at(k, j)));
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
        Mat r(*F_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->add(a_[i], o.a_[i]);
        return r;
    }

    Mat scaled(std::uint8_t c) const {
        Mat r(*F_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->mul(a_[i], c);
        return r;
    }

    Mat transpose() const {
        Mat r(*F_, cols_, rows_);
        for (unsigned i = 0; i < rows_; ++i)
            for (unsigned j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (unsigned i = 0; i < rows_; ++i)
            for (unsigned j = 0; j < cols_; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    std::vector<std::uint8_t> apply_row(const std::vector<std::uint8_t>& v) const {
        if (v.size() != rows_) throw std::invalid_argument("Mat: vector length mismatch");
        std::vector<std::uint8_t> w(cols_, 0);
        for (unsigned i = 0; i < rows_; ++i) {
            if (v[i] == 0) continue;
            for (unsigned j = 0; j < cols_; ++j) w[j] = F_->add(w[j], F_->mul(v[i], at(i, j)));
        }
        return w;
    }

  private:
    const Field* F_;
    unsigned rows_, cols_;
    std::vector<std::uint8_t> a_;
};

// Row space kept in reduced echelon form; supports incremental insertion.
class RowSpace {
  public:
    RowSpace(const Field& F, unsigned width) : F_(&F), width_(width) {}

    unsigned dim() const { return static_cast<unsigned>(rows_.size()); }
    unsigned width() const { return width_; }
    const std::vector<std::vector<std::uint8_t>>& rows() const { return rows_; }

    // Reduce v by the present rows; empty result means already contained.
    std::vector<std::uint8_t> reduce(std::vector<std::uint8_t> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::uint8_t c = v[pivots_[r]];
            if (c == 0) continue;
            for (unsigned j = 0; j < width_; ++j) v[j] = F_->sub(v[j], F_->mul(c, rows_[r][j]));
        }
        return v;
    }

    bool contains(const std::vector<std::uint8_t>& v) const {
        auto r = reduce(v);
        for (auto x : r)
            if (x) return false;
        return true;
    }

    // Returns true when v enlarged the space.
    bool insert(std::vector<std::uint8_t> v) {
        v = reduce(std::move(v));
        unsigned piv = width_;
        for (unsigned j = 0; j < width_; ++j)
            if (v[j]) {
                piv = j;
                break;
            }
        if (piv == width_) return false;
        std::uint8_t c = F_->inv(v[piv]);
        for (unsigned j = 0; j < width_; ++j) v[j] = F_->mul(v[j], c);
        // clear this pivot column in earlier rows, keep rows ordered by pivot
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::uint8_t d = rows_[r][piv];
            if (d == 0) continue;
            for (unsigned j = 0; j < width_; ++j) rows_[r][j] = F_->sub(rows_[r][j], F_->mul(d, v[j]));
        }
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
        auto idx = static_cast<std::size_t>(it - pivots_.begin());
        pivots_.insert(it, piv);
        rows_.insert(rows_.begin() + idx, std::move(v));
        return true;
    }

  private:
    const Field* F_;
    unsigned width_;
    std::vector<std::vector<std::uint8_t>> rows_;
    std::vector<unsigned> pivots_;
};

inline unsigned rank(const Mat& m) {
    RowSpace rs(m.field(), m.cols());
    for (unsigned i = 0; i < m.rows(); ++i) {
        std::vector<std::uint8_t> v(m.cols());
        for (unsigned j = 0; j < m.cols(); ++j) v[j] = m.at(i, j);
        rs.insert(std::move(v));
    }
    return rs.dim();
}

// Basis of { v : v * M = 0 } (row vectors), via column reduction of M.
inline std::vector<std::vector<std::uint8_t>> left_nullspace(const Mat& m) {
    const Field& F = m.field();
    const unsigned n = m.rows();
    // carry an identity alongside and reduce [M | I] by row operations; rows
    // whose M-part vanishes record the dependencies, i.e. the nullspace
    Mat work = m;
    Mat track = Mat::identity(F, n);
    unsigned r = 0;
    for (unsigned c = 0; c < m.cols() && r < n; ++c) {
        unsigned piv = n;
        for (unsigned i = r; i < n; ++i)
            if (work.at(i, c)) {
                piv = i;
                break;
            }
        if (piv == n) continue;
        for (unsigned j = 0; j < m.cols(); ++j) std::swap(work.at(r, j), work.at(piv, j));
        for (unsigned j = 0; j < n; ++j) std::swap(track.at(r, j), track.at(piv, j));
        std::uint8_t inv = F.inv(work.at(r, c));
        for (unsigned j = 0; j < m.cols(); ++j) work.at(r, j) = F.mul(work.at(r, j), inv);
        for (unsigned j = 0; j < n; ++j) track.at(r, j) = F.mul(track.at(r, j), inv);
        for (unsigned i = 0; i < n; ++i) {
            if (i == r) continue;
            std::uint8_t d = work.at(i, c);
            if (d == 0) continue;
            for (unsigned j = 0; j < m.cols(); ++j) work.at(i, j) = F.sub(work.at(i, j), F.mul(d, work.at(r, j)));
            for (unsigned j = 0; j < n; ++j) track.at(i, j) = F.sub(track.at(i, j), F.mul(d, track.at(r, j)));
        }
        ++r;
    }
    std::vector<std::vector<std::uint8_t>> null;
    for (unsigned i = r; i < n; ++i) {
        std::vector<std::uint8_t> v(n);
        for (unsigned j = 0; j < n; ++j) v[j] = track.at(i, j);
        null.push_back(std::move(v));
    }
    return null;
}

// Particular solution of rows * x = rhs, given as augmented rows of width
// n + 1; nullopt when the system is inconsistent.  Free variables are set to
// zero.
inline std::optional<std::vector<std::uint8_t>> solve_linear(const Field& F,
                                                             std::vector<std::vector<std::uint8_t>> aug,
                                                             unsigned n) {
    std::vector<unsigned> pivot_col;
    std::size_t r = 0;
    for (unsigned c = 0; c < n && r < aug.size(); ++c) {
        std::size_t piv = aug.size();
        for (std::size_t i = r; i < aug.size(); ++i)
            if (aug[i][c]) {
                piv = i;
                break;
            }
        if (piv == aug.size()) continue;
        std::swap(aug[r], aug[piv]);
        std::uint8_t inv = F.inv(aug[r][c]);
        for (unsigned j = 0; j <= n; ++j) aug[r][j] = F.mul(aug[r][j], inv);
        for (std::size_t i = 0; i < aug.size(); ++i) {
            if (i == r) continue;
            std::uint8_t d = aug[i][c];
            if (d == 0) continue;
            for (unsigned j = 0; j <= n; ++j) aug[i][j] = F.sub(aug[i][j], F.mul(d, aug[r][j]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < aug.size(); ++i)
        if (aug[i][n]) return std::nullopt;
    std::vector<std::uint8_t> x(n, 0);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug[i][n];
    return x;
}

inline Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("Mat: inverse of a non-square matrix");
    const Field& F = m.field();
    const unsigned n = m.rows();
    Mat work = m, inv = Mat::identity(F, n);
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = n;
        for (unsigned i = c; i < n; ++i)
            if (work.at(i, c)) {
                piv = i;
                break;
            }
        if (piv == n) throw std::domain_error("Mat: singular matrix");
        for (unsigned j = 0; j < n; ++j) {
            std::swap(work.at(c, j), work.at(piv, j));
            std::swap(inv.at(c, j), inv.at(piv, j));
        }
        std::uint8_t d = F.inv(work.at(c, c));
        for (unsigned j = 0; j < n; ++j) {
            work.at(c, j) = F.mul(work.at(c, j), d);
            inv.at(c, j) = F.mul(inv.at(c, j), d);
        }
        for (unsigned i = 0; i < n; ++i) {
            if (i == c) continue;
            std::uint8_t e = work.at(i, c);
            if (e == 0) continue;
            for (unsigned j = 0; j < n; ++j) {
                work.at(i, j) = F.sub(work.at(i, j), F.mul(e, work.at(c, j)));
                inv.at(i, j) = F.sub(inv.at(i, j), F.mul(e, inv.at(c, j)));
            }
        }
    }
    return inv;
}

// Smallest invariant subspace containing the seed vectors.
inline RowSpace spin(const Field& F, unsigned dim, const std::vector<std::vector<std::uint8_t>>& seeds,
                     const std::vector<Mat>& gens) {
    RowSpace rs(F, dim);
    std::vector<std::vector<std::uint8_t>> queue;
    for (const auto& s : seeds)
        if (rs.insert(s)) queue.push_back(s);
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (const auto& g : gens) {
            auto w = g.apply_row(queue[h]);
            if (rs.insert(w)) queue.push_back(std::move(w));
        }
    return rs;
}

enum class ModuleVerdict { Irreducible, Reducible, Undecided };

struct ModuleReport {
    ModuleVerdict verdict = ModuleVerdict::Undecided;
    std::vector<std::vector<std::uint8_t>> submodule;  // proper invariant subspace when reducible
};

// Irreducibility of the module given by `gens` acting on row vectors.
// Certificates run through elements of the generated algebra with a
// one-dimensional kernel: for such an element, spinning a kernel vector and a
// kernel vector of the transposed module both up to the full space proves
// irreducibility, while a proper spin on either side hands back an invariant
// subspace (directly, or as an orthogonal complement).  Elements with larger
// kernels still certify reducibility whenever some kernel vector spins
// proper.  If no usable algebra element turns up within the budget the
// verdict stays Undecided; callers treat that as an error, not as an answer.
inline ModuleReport test_irreducible(const Field& F, unsigned dim, const std::vector<Mat>& gens,
                                     unsigned budget = 32, std::uint64_t seed = 0x3EA7ULL) {
    ModuleReport rep;
    if (dim == 0) throw std::invalid_argument("test_irreducible: zero module");
    if (dim == 1) {
        rep.verdict = ModuleVerdict::Irreducible;
        return rep;
    }
    auto unit = [&](unsigned i) {
        std::vector<std::uint8_t> v(dim, 0);
        v[i] = 1;
        return v;
    };
    // cheap pre-pass: a proper spin of a unit vector settles it
    for (unsigned i = 0; i < 2 && i < dim; ++i) {
        RowSpace rs = spin(F, dim, {unit(i)}, gens);
        if (rs.dim() < dim) {
            rep.verdict = ModuleVerdict::Reducible;
            rep.submodule = rs.rows();
            return rep;
        }
    }
    if (gens.empty()) {  // full spin with no generators means dim <= 1, handled above
        rep.verdict = ModuleVerdict::Reducible;
        rep.submodule = {unit(0)};
        return rep;
    }

    std::mt19937_64 rng(seed);
    std::vector<Mat> tgens;
    for (const auto& g : gens) tgens.push_back(g.transpose());
    auto random_word = [&]() {
        Mat w = gens[rng() % gens.size()];
        unsigned len = 1 + static_cast<unsigned>(rng() % 3);
        for (unsigned i = 0; i < len; ++i) w = w * gens[rng() % gens.size()];
        return w;
    };
    for (unsigned t = 0; t < budget; ++t) {
        // random element of the group algebra: a short sum of scaled words
        Mat theta = random_word().scaled(static_cast<std::uint8_t>(1 + rng() % (F.q() - 1)));
        unsigned terms = 1 + static_cast<unsigned>(rng() % 2);
        for (unsigned i = 0; i < terms; ++i)
            theta = theta + random_word().scaled(static_cast<std::uint8_t>(rng() % F.q()));
        auto null = left_nullspace(theta);
        if (null.empty() || null.size() == dim) continue;
        for (const auto& v : null) {
            RowSpace rs = spin(F, dim, {v}, gens);
            if (rs.dim() < dim) {
                rep.verdict = ModuleVerdict::Reducible;
                rep.submodule = rs.rows();
                return rep;
            }
        }
        if (null.size() != 1) continue;  // the two-sided certificate needs nullity one
        // transpose side of the nullity-one criterion
        auto tnull = left_nullspace(theta.transpose());
        if (tnull.size() != 1) continue;  // defensive; ranks agree
        RowSpace ts = spin(F, dim, {tnull[0]}, tgens);
        if (ts.dim() == dim) {
            rep.verdict = ModuleVerdict::Irreducible;
            return rep;
        }
        // orthogonal complement of a transposed-module submodule is invariant here
        Mat basis(F, dim, static_cast<unsigned>(ts.rows().size()));
        for (unsigned j = 0; j < ts.rows().size(); ++j)
            for (unsigned i = 0; i < dim; ++i) basis.at(i, j) = ts.rows()[j][i];
        auto perp = left_nullspace(basis);
        if (perp.empty() || perp.size() == dim) throw std::logic_error("test_irreducible: degenerate complement");
        rep.verdict = ModuleVerdict::Reducible;
        rep.submodule = std::move(perp);
        return rep;
    }
    return rep;  // Undecided
}

// Direct-sum decomposition into irreducible pieces; bases are rows in the
// ambient coordinates.
struct ModuleDecomposition {
    std::vector<unsigned> dims;
    std::vector<std::vector<std::vector<std::uint8_t>>> bases;
};

// Splits the module into irreducible constituents, certifying complete
// reducibility along the way: each proper invariant subspace discovered must
// be matched with an invariant complement before recursing into the two
// halves.  In coordinates adapted to the submodule the generators are block
// lower triangular [[A,0],[B,C]], and the row space of [X | I] is an
// invariant complement exactly when X*A_g - C_g*X = -B_g for every
// generator; that linear system is solvable if and only if a complement
// exists, so inconsistency certifies failure of complete reducibility.
inline ModuleDecomposition irreducible_constituents(const Field& F, unsigned dim, const std::vector<Mat>& gens,
                                                    unsigned budget = 32, std::uint64_t seed = 0x3EA7ULL) {
    ModuleReport rep = test_irreducible(F, dim, gens, budget, seed);
    if (rep.verdict == ModuleVerdict::Undecided)
        throw std::runtime_error("irreducible_constituents: analysis budget exhausted without a verdict");
    if (rep.verdict == ModuleVerdict::Irreducible) {
        ModuleDecomposition out;
        out.dims = {dim};
        std::vector<std::vector<std::uint8_t>> basis;
        for (unsigned i = 0; i < dim; ++i) {
            std::vector<std::uint8_t> e(dim, 0);
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        out.bases = {std::move(basis)};
        return out;
    }

    // change basis so the submodule spans the leading coordinates
    RowSpace ext(F, dim);
    std::vector<std::vector<std::uint8_t>> bas;
    for (const auto& w : rep.submodule) {
        if (!ext.insert(w)) throw std::logic_error("irreducible_constituents: dependent submodule basis");
        bas.push_back(w);
    }
    const unsigned k = static_cast<unsigned>(bas.size());
    const unsigned m = dim - k;
    for (unsigned i = 0; i < dim && bas.size() < dim; ++i) {
        std::vector<std::uint8_t> e(dim, 0);
        e[i] = 1;
        if (ext.insert(e)) bas.push_back(std::move(e));
    }
    Mat basis(F, dim, dim);
    for (unsigned i = 0; i < dim; ++i)
        for (unsigned j = 0; j < dim; ++j) basis.at(i, j) = bas[i][j];
    Mat basis_inv = inverse(basis);

    std::vector<Mat> As, Bs, Cs;
    for (const auto& g : gens) {
        Mat X = basis * g * basis_inv;
        Mat a(F, k, k), b(F, m, k), c(F, m, m);
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j) a.at(i, j) = X.at(i, j);
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = k; j < dim; ++j)
                if (X.at(i, j)) throw std::logic_error("irreducible_constituents: submodule witness not invariant");
        for (unsigned i = k; i < dim; ++i)
            for (unsigned j = 0; j < k; ++j) b.at(i - k, j) = X.at(i, j);
        for (unsigned i = k; i < dim; ++i)
            for (unsigned j = k; j < dim; ++j) c.at(i - k, j - k) = X.at(i, j);
        As.push_back(std::move(a));
        Bs.push_back(std::move(b));
        Cs.push_back(std::move(c));
    }

    // unknowns X[r][s] (r < m, s < k): one equation per generator and matrix
    // position, coefficient of X[r][s] in equation (t,i,j) being
    // [r==i]*A_t[s][j] - [s==j]*C_t[i][r]
    const unsigned nx = m * k;
    std::vector<std::vector<std::uint8_t>> aug;
    for (std::size_t t = 0; t < gens.size(); ++t)
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < k; ++j) {
                std::vector<std::uint8_t> row(nx + 1, 0);
                for (unsigned s = 0; s < k; ++s) row[i * k + s] = F.add(row[i * k + s], As[t].at(s, j));
                for (unsigned r = 0; r < m; ++r)
                    row[r * k + j] = F.sub(row[r * k + j], Cs[t].at(i, r));
                row[nx] = F.neg(Bs[t].at(i, j));
                aug.push_back(std::move(row));
            }
    auto sol = solve_linear(F, std::move(aug), nx);
    if (!sol) throw std::runtime_error("complete reducibility not certified");
    Mat X(F, m, k);
    for (unsigned r = 0; r < m; ++r)
        for (unsigned s = 0; s < k; ++s) X.at(r, s) = (*sol)[r * k + s];
    for (std::size_t t = 0; t < gens.size(); ++t)
        if (!(X * As[t] + Bs[t] == Cs[t] * X)) throw std::logic_error("irreducible_constituents: bad complement");

    // ambient rows of the complement: [X | I] carried through the basis change
    Mat lift(F, m, dim);
    for (unsigned r = 0; r < m; ++r) {
        for (unsigned s = 0; s < k; ++s) lift.at(r, s) = X.at(r, s);
        lift.at(r, k + r) = 1;
    }
    Mat comp_rows = lift * basis;

    // in the W-parameterization the action is A_g, on the complement it is C_g
    ModuleDecomposition sub = irreducible_constituents(F, k, As, budget, seed * 2 + 1);
    ModuleDecomposition quo = irreducible_constituents(F, m, Cs, budget, seed * 2 + 2);
    ModuleDecomposition out;
    auto lift_rows = [&](const std::vector<std::vector<std::uint8_t>>& local, const Mat& amb) {
        std::vector<std::vector<std::uint8_t>> rows;
        for (const auto& y : local) rows.push_back(amb.apply_row(y));
        return rows;
    };
    Mat w_rows(F, k, dim);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < dim; ++j) w_rows.at(i, j) = bas[i][j];
    for (std::size_t i = 0; i < sub.dims.size(); ++i) {
        out.dims.push_back(sub.dims[i]);
        out.bases.push_back(lift_rows(sub.bases[i], w_rows));
    }
    for (std::size_t i = 0; i < quo.dims.size(); ++i) {
        out.dims.push_back(quo.dims[i]);
        out.bases.push_back(lift_rows(quo.bases[i], comp_rows));
    }
    return out;
}

// Constituent dimensions of a certified completely reducible module.  Throws
// when the budget leaves a verdict undecided or no complement exists.
inline std::vector<unsigned> constituent_dims(const Field& F, unsigned dim, const std::vector<Mat>& gens,
                                              unsigned budget = 32, std::uint64_t seed = 0x3EA7ULL) {
    return irreducible_constituents(F, dim, gens, budget, seed).dims;
}

// Permutation shadow on the nonzero vectors.  Vector (v_0..v_{d-1}) over
// GF(q) sits at point  sum v_i q^i  -  1.
inline std::vector<Perm> matgroup_to_perm_gens(const Field& F, unsigned dim, const std::vector<Mat>& mats) {
    BigInt total = big_pow(BigInt(F.q()), dim) - 1;
    if (total > kMaxDegree) throw std::invalid_argument("matgroup_to_perm_gens: too many vectors");
    const unsigned n = total.convert_to<unsigned>();
    std::vector<Perm> out;
    for (const auto& m : mats) {
        std::vector<Point> img(n);
        for (unsigned x = 0; x < n; ++x) {
            unsigned v = x + 1;
            std::vector<std::uint8_t> vec(dim);
            for (unsigned i = 0; i < dim; ++i) {
                vec[i] = static_cast<std::uint8_t>(v % F.q());
                v /= F.q();
            }
            auto w = m.apply_row(vec);
            unsigned y = 0;
            for (unsigned i = dim; i-- > 0;) y = y * F.q() + w[i];
            if (y == 0) throw std::invalid_argument("matgroup_to_perm_gens: singular matrix");
            img[x] = y - 1;
        }
        out.push_back(Perm::from_images(std::move(img)));
    }
    return out;
}

inline BigInt gl_order(unsigned d, unsigned q) {
    BigInt o = 1, qd = big_pow(BigInt(q), d);
    for (unsigned i = 0; i < d; ++i) o *= qd - big_pow(BigInt(q), i);
    return o;
}

// Generators of GL(d, q): a primitive scalar in the first coordinate, the
// basis cycle, and one transvection.
inline std::vector<Mat> gl_gens(const Field& F, unsigned d) {
    if (d == 0) throw std::invalid_argument("gl_gens: dimension zero");
    std::vector<Mat> gens;
    Mat diag = Mat::identity(F, d);
    diag.at(0, 0) = F.gen();
    if (F.q() > 2) gens.push_back(diag);
    if (d >= 2) {
        Mat cyc(F, d, d);
        for (unsigned i = 0; i < d; ++i) cyc.at(i, (i + 1) % d) = 1;
        gens.push_back(cyc);
        Mat trans = Mat::identity(F, d);
        trans.at(0, 1) = 1;
        gens.push_back(trans);
    }
    return gens;
}

inline PermGroup gl_on_nonzero_vectors(unsigned d, unsigned q, std::uint64_t seed = 0x5eedULL) {
    const Field& F = Field::get(q);
    auto perms = matgroup_to_perm_gens(F, d, gl_gens(F, d));
    BigInt deg = big_pow(BigInt(q), d) - 1;
    PermGroup g =
        PermGroup::with_claimed_order(deg.convert_to<unsigned>(), std::move(perms), gl_order(d, q), seed);
    g.set_tag("GLperm(" + std::to_string(d) + "," + std::to_string(q) + ")");
    return g;
}

}  // namespace complen
