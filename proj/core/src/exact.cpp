#include "c2eff/exact.hpp"

#include <cassert>
#include <cstdlib>
#include <utility>

namespace c2eff {

MInt checked_mul(MInt a, MInt b) {
    MInt r;
    bool bad = __builtin_mul_overflow(a, b, &r);
    assert(!bad && "integer overflow in matrix arithmetic");
    (void)bad;
    return r;
}

MInt checked_add(MInt a, MInt b) {
    MInt r;
    bool bad = __builtin_add_overflow(a, b, &r);
    assert(!bad && "integer overflow in matrix arithmetic");
    (void)bad;
    return r;
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    assert(cols == o.rows);
    IntMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            MInt x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols; ++j)
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(x, o.at(k, j)));
        }
    return r;
}

std::vector<MInt> IntMat::apply(const std::vector<MInt>& v) const {
    assert(static_cast<int>(v.size()) == cols);
    std::vector<MInt> r(rows, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != 0) r[i] = checked_add(r[i], checked_mul(at(i, j), v[j]));
    return r;
}

IntMat IntMat::hcat(const IntMat& o) const {
    assert(rows == o.rows || cols == 0 || o.cols == 0);
    int r = rows ? rows : o.rows;
    IntMat m(r, cols + o.cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows; ++i)
        for (int j = 0; j < o.cols; ++j) m.at(i, cols + j) = o.at(i, j);
    return m;
}

IntMat IntMat::column(int j) const {
    IntMat m(rows, 1);
    for (int i = 0; i < rows; ++i) m.at(i, 0) = at(i, j);
    return m;
}

bool IntMat::is_zero() const {
    for (MInt x : a)
        if (x != 0) return false;
    return true;
}

std::vector<MInt> SnfResult::diag() const {
    int n = std::min(d.rows, d.cols);
    std::vector<MInt> out(n);
    for (int i = 0; i < n; ++i) out[i] = d.at(i, i);
    return out;
}

namespace {

// Row/column operations applied simultaneously to the work matrix and the
// accumulated transforms.  u_inv receives the inverse row operations as
// column operations, so u * u_inv = 1 throughout.
struct SnfWork {
    IntMat a, u, v, u_inv;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
        for (int r = 0; r < u_inv.rows; ++r) std::swap(u_inv.at(r, i), u_inv.at(r, j));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    // row i += c * row j
    void add_row(int i, int j, MInt c) {
        if (c == 0) return;
        for (int k = 0; k < a.cols; ++k)
            a.at(i, k) = checked_add(a.at(i, k), checked_mul(c, a.at(j, k)));
        for (int k = 0; k < u.cols; ++k)
            u.at(i, k) = checked_add(u.at(i, k), checked_mul(c, u.at(j, k)));
        for (int r = 0; r < u_inv.rows; ++r)
            u_inv.at(r, j) = checked_add(u_inv.at(r, j), checked_mul(-c, u_inv.at(r, i)));
    }
    // col i += c * col j
    void add_col(int i, int j, MInt c) {
        if (c == 0) return;
        for (int r = 0; r < a.rows; ++r)
            a.at(r, i) = checked_add(a.at(r, i), checked_mul(c, a.at(r, j)));
        for (int r = 0; r < v.rows; ++r)
            v.at(r, i) = checked_add(v.at(r, i), checked_mul(c, v.at(r, j)));
    }
    void negate_row(int i) {
        for (int k = 0; k < a.cols; ++k) a.at(i, k) = -a.at(i, k);
        for (int k = 0; k < u.cols; ++k) u.at(i, k) = -u.at(i, k);
        for (int r = 0; r < u_inv.rows; ++r) u_inv.at(r, i) = -u_inv.at(r, i);
    }
};

}  // namespace

SnfResult smith_normal_form(IntMat m) {
    SnfWork w{std::move(m), IntMat::identity(0), IntMat::identity(0), IntMat::identity(0)};
    w.u = IntMat::identity(w.a.rows);
    w.u_inv = IntMat::identity(w.a.rows);
    w.v = IntMat::identity(w.a.cols);

    int n = std::min(w.a.rows, w.a.cols);
    int t = 0;
    for (; t < n; ++t) {
        // Find a pivot of minimal absolute value in the trailing block.
        int pi = -1, pj = -1;
        MInt best = 0;
        for (int i = t; i < w.a.rows; ++i)
            for (int j = t; j < w.a.cols; ++j) {
                MInt x = w.a.at(i, j);
                if (x == 0) continue;
                MInt ax = x < 0 ? -x : x;
                if (pi < 0 || ax < best) {
                    pi = i;
                    pj = j;
                    best = ax;
                }
            }
        if (pi < 0) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = t + 1; i < w.a.rows; ++i) {
                MInt q = w.a.at(i, t) / w.a.at(t, t);
                w.add_row(i, t, -q);
                if (w.a.at(i, t) != 0) {
                    w.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < w.a.cols; ++j) {
                MInt q = w.a.at(t, j) / w.a.at(t, t);
                w.add_col(j, t, -q);
                if (w.a.at(t, j) != 0) {
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Pivot must divide the rest of the block for the chain d1 | d2...
            for (int i = t + 1; i < w.a.rows && !dirty; ++i)
                for (int j = t + 1; j < w.a.cols && !dirty; ++j)
                    if (w.a.at(i, j) % w.a.at(t, t) != 0) {
                        w.add_row(t, i, 1);
                        dirty = true;
                    }
        }
        if (w.a.at(t, t) < 0) w.negate_row(t);
    }

    SnfResult r;
    r.d = std::move(w.a);
    r.u = std::move(w.u);
    r.v = std::move(w.v);
    r.u_inv = std::move(w.u_inv);
    r.rank = t;
    return r;
}

IntMat kernel_basis(const IntMat& a) {
    SnfResult s = smith_normal_form(a);
    IntMat k(a.cols, a.cols - s.rank);
    for (int j = s.rank; j < a.cols; ++j)
        for (int i = 0; i < a.cols; ++i) k.at(i, j - s.rank) = s.v.at(i, j);
    return k;
}

std::optional<std::vector<MInt>> solve(const IntMat& a, const std::vector<MInt>& b) {
    SnfResult s = smith_normal_form(a);
    std::vector<MInt> ub = s.u.apply(b);
    std::vector<MInt> y(a.cols, 0);
    for (int i = 0; i < a.rows; ++i) {
        if (i < s.rank) {
            MInt d = s.d.at(i, i);
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v.apply(y);
}

MInt two_local_order(MInt d) {
    if (d == 0) return 0;
    if (d < 0) d = -d;
    MInt r = 1;
    while (d % 2 == 0) {
        d /= 2;
        r *= 2;
    }
    return r;
}

Subquotient::Subquotient(const IntMat& cycles, const IntMat& boundaries, int ambient_dim)
    : ambient_dim_(ambient_dim), cycle_span_(cycles) {
    assert(cycles.rows == ambient_dim || cycles.cols == 0);
    assert(boundaries.rows == ambient_dim || boundaries.cols == 0);

    IntMat c = cycles;
    if (c.rows == 0) c = IntMat(ambient_dim, c.cols);
    lattice_snf_ = smith_normal_form(c);
    int r = lattice_snf_.rank;

    // Lattice basis: columns d_i * (u_inv e_i), i < r.
    lattice_basis_ = IntMat(ambient_dim, r);
    for (int j = 0; j < r; ++j) {
        MInt d = lattice_snf_.d.at(j, j);
        for (int i = 0; i < ambient_dim; ++i)
            lattice_basis_.at(i, j) = checked_mul(d, lattice_snf_.u_inv.at(i, j));
    }

    // Boundaries expressed in lattice coordinates; they must lie in the lattice.
    IntMat bc(r, boundaries.cols);
    for (int j = 0; j < boundaries.cols; ++j) {
        std::vector<MInt> col(ambient_dim);
        for (int i = 0; i < ambient_dim; ++i) col[i] = boundaries.at(i, j);
        std::vector<MInt> uc = lattice_snf_.u.apply(col);
        for (int i = 0; i < ambient_dim; ++i) {
            if (i < r) {
                MInt d = lattice_snf_.d.at(i, i);
                assert(uc[i] % d == 0 && "boundary not contained in cycle lattice");
                bc.at(i, j) = uc[i] / d;
            } else {
                assert(uc[i] == 0 && "boundary not contained in cycle lattice");
            }
        }
    }

    SnfResult q = smith_normal_form(bc);
    coord_transform_ = q.u;  // lattice coords -> generator coords
    gens_full_ = lattice_basis_ * q.u_inv;
    full_orders_.assign(r, 0);
    for (int i = 0; i < q.rank; ++i) full_orders_[i] = two_local_order(q.d.at(i, i));
    for (int i = 0; i < r; ++i) {
        if (full_orders_[i] == 1) continue;  // odd order: a 2-local unit
        gen_index_.push_back(i);
        orders_.push_back(full_orders_[i]);
    }
}

std::vector<MInt> Subquotient::generator(int i) const {
    int j = gen_index_[i];
    std::vector<MInt> out(ambient_dim_);
    for (int k = 0; k < ambient_dim_; ++k) out[k] = gens_full_.at(k, j);
    return out;
}

std::optional<std::vector<MInt>> Subquotient::coords(const std::vector<MInt>& v) const {
    assert(static_cast<int>(v.size()) == ambient_dim_);
    int r = lattice_snf_.rank;
    std::vector<MInt> uv = lattice_snf_.u.apply(v);
    std::vector<MInt> lat(r, 0);
    for (int i = 0; i < ambient_dim_; ++i) {
        if (i < r) {
            MInt d = lattice_snf_.d.at(i, i);
            if (uv[i] % d != 0) return std::nullopt;
            lat[i] = uv[i] / d;
        } else if (uv[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<MInt> full = coord_transform_.apply(lat);
    std::vector<MInt> out(orders_.size(), 0);
    for (size_t i = 0; i < gen_index_.size(); ++i) {
        MInt c = full[gen_index_[i]];
        MInt d = orders_[i];
        if (d != 0) {
            c %= d;
            if (c < 0) c += d;
        }
        out[i] = c;
    }
    return out;
}

bool Subquotient::is_zero(const std::vector<MInt>& v) const {
    auto c = coords(v);
    assert(c && "vector outside the cycle lattice");
    for (MInt x : *c)
        if (x != 0) return false;
    return true;
}

}  // namespace c2eff
