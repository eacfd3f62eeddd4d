#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sturmkit/morphism.hpp"
#include "sturmkit/quadratic.hpp"

namespace sturmkit {

/// Bit string i1...in addressing a binary-tree node; "" is the root.
using NodeAddress = std::string;

inline constexpr int kDefaultDepthCap = 16;

/// Reduced fraction p/q in (0, 1).
struct TreeFraction {
    BigInt p, q;
    friend bool operator==(const TreeFraction&, const TreeFraction&) = default;
};

/// Value of the harmonic-fraction tree at an address: the root holds 1/2
/// and a node p/q has children p/(p+q) and q/(p+q).  Equals the product
/// of the step matrices applied to (1, 2).
TreeFraction kepler_value(const NodeAddress& addr);

/// The 2^n values of level n in address order.
std::vector<TreeFraction> kepler_level(int n, int depth_cap = kDefaultDepthCap);

/// Inverse lookup: the unique address holding f, walking parent steps
/// a/b -> a/(b-a) (child 0) or a/b -> (b-a)/a (child 1) down to 1/2.
NodeAddress locate_fraction(const TreeFraction& f);

/// Composite phi_{i_n} . ... . phi_{i_1} at address i_1...i_n (identity
/// at the root), with phi_0 = psi3 and phi_1 = psi1.
BinaryMorphism morphism_at(const NodeAddress& addr);

enum class MatrixFamily {
    K, // Kepler step matrices
    M, // incidence matrices of phi_0, phi_1
};

/// Product in node order (index i_n leftmost).  For every address the
/// two families are conjugate by the swap matrix.
Mat2 matrix_at(const NodeAddress& addr, MatrixFamily family);

/// Slope of the characteristic word fixed by morphism_at(addr), solved
/// exactly from the fixed point of the associated parameter map; nothing
/// on the left edge 0^n (those morphisms generate no infinite word).
std::optional<QuadraticNumber> sturm_number_at(const NodeAddress& addr);

/// Composite over psi3 (bit 0) and psi8 (bit 1) in the same node order;
/// these fix the words s_{alpha,0}.
BinaryMorphism tree38_morphism_at(const NodeAddress& addr);

enum class TreeKind { Kepler, Phi, MatrixK, MatrixM, Sturm, M38 };
enum class TreeFormat { Ascii, Dot, Json };

/// Deterministic serialization of the first `depth` levels.  JSON is an
/// object keyed by address ("" for the root); DOT is a digraph with node
/// ids equal to the address strings and "L" for the root.
std::string export_tree(TreeKind kind, int depth, TreeFormat format,
                        int depth_cap = kDefaultDepthCap);

} // namespace sturmkit
