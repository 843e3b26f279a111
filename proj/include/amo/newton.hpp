#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amo/laurent.hpp"

namespace amo {

/// Half space {x : normal . x >= offset} with inward primitive integer normal.
struct Facet {
    std::vector<long> normal;
    long offset = 0;
};

/// A face of a Newton polytope, described by its vertex set and the lattice
/// points it carries. For the improper face (the polytope itself) the
/// defining facet list is empty.
struct FaceDescriptor {
    int dimension = 0;
    std::vector<size_t> defining_facets;
    std::vector<Exp> vertices;
    std::vector<Exp> lattice_points;
};

/// Newton polytope of a Laurent polynomial, ambient dimension at most 3.
/// Handles lower dimensional hulls (point, segment, planar polygon in 3-space)
/// by carrying affine-hull equalities next to the facet inequalities.
class NewtonPolytope {
  public:
    static NewtonPolytope of(const LaurentPoly& f);
    static NewtonPolytope from_points(int arity, std::vector<Exp> points);

    int arity() const { return arity_; }
    int dim() const { return dim_; }
    const std::vector<Exp>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    /// Equalities normal . x == offset cutting out the affine hull.
    const std::vector<Facet>& hull_equalities() const { return equalities_; }

    bool contains(const Exp& x) const;
    /// n! * volume; 0 when the polytope is not full dimensional.
    long normalized_volume() const;
    /// All integer points inside, grlex sorted.
    std::vector<Exp> lattice_points() const;
    /// Every face: vertices, edges, 2-faces, and the polytope itself.
    std::vector<FaceDescriptor> faces() const;
    /// Face of maximizers of v . x.
    FaceDescriptor support_face(const std::vector<long>& v) const;

  private:
    int arity_ = 0;
    int dim_ = 0;
    std::vector<Exp> vertices_;
    std::vector<Facet> facets_;
    std::vector<Facet> equalities_;
};

/// Terms of f supported on the face.
LaurentPoly truncation(const LaurentPoly& f, const FaceDescriptor& face);

struct DegeneracyReport {
    bool nondegenerate = true;
    /// False when a verdict rests on uncertified numerics only.
    bool certified = true;
    /// Filled when degenerate: the offending face and a torus point where the
    /// face truncation and all its logarithmic derivatives vanish.
    std::optional<FaceDescriptor> face;
    std::vector<Complex> witness;
    std::string detail;
};

/// Checks every face truncation of f for singular points in the torus.
DegeneracyReport is_nondegenerate(const LaurentPoly& f);

/// Basis of the integer lattice spanned by the given vectors, as rows
/// (Hermite form). Exposed for tests.
std::vector<std::vector<long>> lattice_row_basis(
    const std::vector<std::vector<long>>& rows);

}  // namespace amo
