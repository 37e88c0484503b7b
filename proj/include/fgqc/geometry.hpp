#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fgqc/bitvec.hpp"
#include "fgqc/field.hpp"

namespace fgqc {

enum class GeometryKind : uint8_t {
    EuclideanNoOrigin = 0,  // EG(m,q) with the origin and the lines through it removed
    Projective = 1,
};

struct GeometrySpec {
    GeometryKind kind;
    uint32_t m;  // dimension, >= 2
    uint32_t q;  // subfield order, prime power

    bool operator==(const GeometrySpec&) const = default;
};

// a line as its sorted point indices (rho = q points Euclidean, q+1 projective)
struct Line {
    std::vector<uint32_t> points;

    bool operator==(const Line&) const = default;
    bool operator<(const Line& o) const { return points < o.points; }
};

// one orbit of lines under the cyclic point map alpha^i -> alpha^(i+1);
// representative satisfies: leading position 0 is on the line, and the gap
// to the second position is the minimal cyclic gap (ties: lexicographically
// smallest incident bit string).
struct CyclicClass {
    BitVec representative;
    std::vector<uint32_t> support;  // sorted set-bit positions of representative
    uint32_t j2;                    // second set position
    uint32_t orbit_size;            // always the full point count here
};

// incident vector of alpha^i * F given the one of F: cyclic shift by i
inline BitVec shift_line(const BitVec& v, size_t i) { return v.rotated(i); }

// Closed forms on the spec alone, without building the underlying field, so
// they stay cheap for parameter sweeps far beyond constructible sizes.
// All validate the spec (m >= 2, prime-power q) and throw UnknownGeometry /
// GeometryTooLarge.
uint64_t point_count_of(const GeometrySpec& spec);   // circulant dimension p
uint32_t line_weight_of(const GeometrySpec& spec);   // rho
uint64_t class_count_of(const GeometrySpec& spec);   // primitive cyclic classes

// canonical representative of the rotation orbit of v, plus the shift such
// that shift_line(representative, shift) == v.  Throws NonPrimitiveOrbit if
// the orbit is smaller than the vector length.
struct Canonical {
    CyclicClass cls;
    uint32_t shift;
};
Canonical canonicalize(const BitVec& v);

class Geometry {
  public:
    explicit Geometry(const GeometrySpec& spec);

    const GeometrySpec& spec() const { return spec_; }
    const Field& field() const { return *field_; }
    uint32_t point_count() const { return p_; }       // circulant dimension p
    uint32_t line_weight() const { return rho_; }     // points per line
    uint32_t lines_per_point() const { return gamma_; }

    // closed-form number of primitive cyclic line classes
    uint64_t class_count() const;

    // Euclidean: the gamma lines through pt that avoid the origin.
    // pt is a point index (exponent of alpha).
    std::vector<Line> lines_through_point(uint32_t pt) const;

    // projective line through two distinct points given by indices in [0,p)
    Line projective_line(uint32_t j1, uint32_t j2) const;

    BitVec incident_vector(const Line& line) const;

    // all primitive cyclic classes in canonical order: ascending j2, ties by
    // lexicographically smallest representative string.  Cached.
    const std::vector<CyclicClass>& cyclic_classes() const;

  private:
    GeometrySpec spec_;
    std::shared_ptr<Field> field_;
    uint32_t p_ = 0, rho_ = 0, gamma_ = 0;
    std::vector<Field::Elem> scalars_;  // the embedded GF(q), 0 first
    mutable std::vector<CyclicClass> classes_;
    mutable bool classes_built_ = false;

    uint32_t point_of(Field::Elem e) const;  // index of a nonzero element's point
};

}  // namespace fgqc
