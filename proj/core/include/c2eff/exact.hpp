#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace c2eff {

// Exact integer linear algebra on small dense matrices.  Entries here stay
// tiny (differentials and relation matrices over {0,1,2}), so a checked
// 64-bit integer is enough; every arithmetic step asserts against overflow.
using MInt = long long;

MInt checked_mul(MInt a, MInt b);
MInt checked_add(MInt a, MInt b);

struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<MInt> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    MInt& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    MInt at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMat identity(int n);
    IntMat operator*(const IntMat& o) const;
    std::vector<MInt> apply(const std::vector<MInt>& v) const;  // this * v
    IntMat hcat(const IntMat& o) const;
    IntMat column(int j) const;
    bool is_zero() const;
    bool operator==(const IntMat&) const = default;
};

// U * A * V = D with U, V unimodular and D diagonal with the divisibility
// chain d1 | d2 | ... (entries nonnegative).
struct SnfResult {
    IntMat d, u, v;
    IntMat u_inv;
    int rank = 0;
    std::vector<MInt> diag() const;
};

SnfResult smith_normal_form(IntMat a);

// Columns generate the integer kernel of a.
IntMat kernel_basis(const IntMat& a);

// Some x with a*x = b, if one exists.
std::optional<std::vector<MInt>> solve(const IntMat& a, const std::vector<MInt>& b);

// 2-local order of a cyclic factor Z/d: 0 stays 0 (free), d > 0 maps to the
// 2-part of d.
MInt two_local_order(MInt d);

// Finitely generated subquotient H = L / span(B), where L is the lattice
// spanned by the columns of C and span(B) <= L.  Orders and coordinates are
// taken 2-locally: odd factors are units.
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(const IntMat& cycles, const IntMat& boundaries, int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    int num_generators() const { return static_cast<int>(orders_.size()); }
    bool trivial() const { return orders_.empty(); }

    // Order of generator i: 0 for a free (Z2) generator, else a power of 2.
    MInt order(int i) const { return orders_[i]; }
    // Representative of generator i in ambient coordinates.
    std::vector<MInt> generator(int i) const;

    // Coordinates of an ambient vector in the generators, reduced mod orders.
    // nullopt if the vector does not lie in the cycle lattice.
    std::optional<std::vector<MInt>> coords(const std::vector<MInt>& v) const;
    bool is_zero(const std::vector<MInt>& v) const;

private:
    int ambient_dim_ = 0;
    std::vector<MInt> orders_;      // one per surviving generator
    std::vector<int> gen_index_;    // surviving column index into gens_full_
    IntMat lattice_basis_;          // ambient_dim x r, basis of the cycle lattice
    IntMat gens_full_;              // ambient_dim x r, all generators pre-pruning
    IntMat coord_transform_;        // r x r, lattice coords -> generator coords
    std::vector<MInt> full_orders_; // one per column of gens_full_
    SnfResult lattice_snf_;         // SNF used to solve membership in the lattice
    IntMat cycle_span_;             // the generating set we were given
};

}  // namespace c2eff
