#include "fgqc/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

#include "fgqc/errors.hpp"

namespace fgqc {

namespace {

uint64_t upow(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// lexicographic comparison of two rotations given as ascending support lists
// over the same length (both starting with 0).  As character strings a '0'
// beats a '1', so the rotation whose next set position comes *later* is the
// smaller string.
bool support_string_less(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return a.size() < b.size();
}

// power with an overflow guard generous enough for any search grid
uint64_t checked_pow(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) {
        if (r > (uint64_t(1) << 62) / b) throw GeometryTooLarge("geometry size overflows 62 bits");
        r *= b;
    }
    return r;
}

void validate_spec(const GeometrySpec& spec) {
    if (spec.m < 2) throw UnknownGeometry("dimension m must be >= 2");
    uint32_t pc = 0, s = 0;
    if (!prime_power(spec.q, pc, s)) throw UnknownGeometry("q must be a prime power");
}

}  // namespace

uint64_t point_count_of(const GeometrySpec& spec) {
    validate_spec(spec);
    if (spec.kind == GeometryKind::EuclideanNoOrigin) return checked_pow(spec.q, spec.m) - 1;
    return (checked_pow(spec.q, spec.m + 1) - 1) / (spec.q - 1);
}

uint32_t line_weight_of(const GeometrySpec& spec) {
    validate_spec(spec);
    return spec.kind == GeometryKind::EuclideanNoOrigin ? spec.q : spec.q + 1;
}

uint64_t class_count_of(const GeometrySpec& spec) {
    validate_spec(spec);
    const uint64_t q = spec.q;
    if (spec.kind == GeometryKind::EuclideanNoOrigin)
        return (checked_pow(q, spec.m - 1) - 1) / (q - 1);
    if (spec.m % 2 == 0) return (checked_pow(q, spec.m) - 1) / (q * q - 1);
    return q * (checked_pow(q, spec.m - 1) - 1) / (q * q - 1);
}

Canonical canonicalize(const BitVec& v) {
    const size_t p = v.size();
    std::vector<uint32_t> sup = v.support();
    const size_t w = sup.size();
    if (w < 2) throw BadParameter("canonical form needs at least two set positions");

    // orbit size = smallest divisor d of p with support + d == support
    uint32_t orbit = uint32_t(p);
    for (uint32_t d = 1; d < p; ++d) {
        if (p % d != 0) continue;
        bool invariant = true;
        for (uint32_t s : sup) {
            uint32_t shifted = (s + d) % p;
            if (!v.get(shifted)) {
                invariant = false;
                break;
            }
        }
        if (invariant) {
            orbit = d;
            break;
        }
    }
    if (orbit != p)
        throw NonPrimitiveOrbit("orbit size " + std::to_string(orbit) + " < " + std::to_string(p));

    // candidate rotations put one set bit at position 0 each; candidate k has
    // support (0, gaps[k], gaps[k]+gaps[k+1], ...) where gaps are the cyclic
    // first differences of the original support
    std::vector<uint32_t> gaps(w);
    for (size_t i = 0; i < w; ++i) {
        uint32_t next = sup[(i + 1) % w];
        gaps[i] = uint32_t((next + p - sup[i]) % p);
    }

    std::vector<uint32_t> best;
    uint32_t best_start = 0;
    for (size_t k = 0; k < w; ++k) {
        std::vector<uint32_t> cand(w);
        cand[0] = 0;
        for (size_t i = 1; i < w; ++i) cand[i] = cand[i - 1] + gaps[(k + i - 1) % w];
        if (!best.empty()) {
            if (cand[1] > best[1]) continue;  // rule: minimal second position first
            if (cand[1] == best[1] && !support_string_less(cand, best)) continue;
        }
        best = std::move(cand);
        best_start = sup[k];
    }

    CyclicClass cls;
    cls.support = best;
    cls.representative = BitVec::from_support(p, best);
    cls.j2 = best[1];
    cls.orbit_size = orbit;
    // representative = v rotated so that best_start lands on 0, i.e. rotated
    // by p - best_start; v = representative shifted back by best_start
    return Canonical{std::move(cls), best_start};
}

Geometry::Geometry(const GeometrySpec& spec) : spec_(spec) {
    if (spec.m < 2) throw UnknownGeometry("dimension m must be >= 2");
    uint32_t pc = 0, s = 0;
    if (!prime_power(spec.q, pc, s)) throw UnknownGeometry("q must be a prime power");

    uint32_t ext;       // extension degree over GF(pc)
    uint64_t field_order;
    if (spec.kind == GeometryKind::EuclideanNoOrigin) {
        ext = s * spec.m;
        field_order = upow(spec.q, spec.m);
        p_ = uint32_t(field_order - 1);
        rho_ = spec.q;
        gamma_ = uint32_t((field_order - 1) / (spec.q - 1) - 1);
    } else {
        ext = s * (spec.m + 1);
        field_order = upow(spec.q, spec.m + 1);
        p_ = uint32_t((field_order - 1) / (spec.q - 1));
        rho_ = spec.q + 1;
        gamma_ = uint32_t((upow(spec.q, spec.m) - 1) / (spec.q - 1));
    }
    if (field_order > (uint64_t(1) << 24)) throw GeometryTooLarge("underlying field exceeds 2^24 elements");
    if (p_ > (1u << 16)) throw GeometryTooLarge("point count exceeds 2^16");

    field_ = std::make_shared<Field>(pc, ext);
    scalars_ = field_->subfield(spec.q);
}

uint64_t Geometry::class_count() const { return class_count_of(spec_); }

uint32_t Geometry::point_of(Field::Elem e) const {
    assert(e != 0);
    return field_->log(e) % p_;
}

std::vector<Line> Geometry::lines_through_point(uint32_t pt) const {
    if (spec_.kind != GeometryKind::EuclideanNoOrigin)
        throw UnknownGeometry("per-point line enumeration is a Euclidean operation");
    if (pt >= p_) throw BadParameter("point index out of range");

    const Field& f = *field_;
    Field::Elem a0 = f.alpha_pow(pt);
    std::set<Line> seen;
    for (uint32_t j = 0; j < p_; ++j) {
        if (j == pt) continue;
        Field::Elem dir = f.sub(f.alpha_pow(j), a0);
        // closure {a0 + beta * dir : beta in GF(q)}
        Line line;
        line.points.reserve(rho_);
        bool through_origin = false;
        for (Field::Elem beta : scalars_) {
            Field::Elem pnt = f.add(a0, f.mul(beta, dir));
            if (pnt == 0) {
                through_origin = true;
                break;
            }
            line.points.push_back(point_of(pnt));
        }
        if (through_origin) continue;
        std::sort(line.points.begin(), line.points.end());
        seen.insert(std::move(line));
    }
    return {seen.begin(), seen.end()};
}

Line Geometry::projective_line(uint32_t j1, uint32_t j2) const {
    if (spec_.kind != GeometryKind::Projective)
        throw UnknownGeometry("projective_line needs a projective spec");
    if (j1 >= p_ || j2 >= p_) throw BadParameter("point index out of range");
    if (j1 == j2) throw SamePoint("two distinct points are needed to span a line");

    const Field& f = *field_;
    Field::Elem e1 = f.alpha_pow(j1), e2 = f.alpha_pow(j2);
    std::set<uint32_t> pts;
    for (Field::Elem u : scalars_) {
        for (Field::Elem v : scalars_) {
            if (u == 0 && v == 0) continue;
            pts.insert(point_of(f.add(f.mul(u, e1), f.mul(v, e2))));
        }
    }
    Line line;
    line.points.assign(pts.begin(), pts.end());
    assert(line.points.size() == rho_);
    return line;
}

BitVec Geometry::incident_vector(const Line& line) const {
    BitVec v(p_);
    for (uint32_t pt : line.points) v.set(pt);
    return v;
}

const std::vector<CyclicClass>& Geometry::cyclic_classes() const {
    if (classes_built_) return classes_;

    // every orbit contains a line through point 0, so scanning those lines
    // visits every class at least once
    std::vector<Line> candidates;
    if (spec_.kind == GeometryKind::EuclideanNoOrigin) {
        candidates = lines_through_point(0);
    } else {
        std::set<Line> seen;
        for (uint32_t j = 1; j < p_; ++j) seen.insert(projective_line(0, j));
        candidates.assign(seen.begin(), seen.end());
    }
    assert(candidates.size() == gamma_);

    std::vector<CyclicClass> classes;
    std::set<std::vector<uint32_t>> reps;
    for (const Line& line : candidates) {
        Canonical c;
        try {
            c = canonicalize(incident_vector(line));
        } catch (const NonPrimitiveOrbit&) {
            // projective geometries of odd dimension contain short orbits;
            // those classes are excluded by construction
            if (spec_.kind == GeometryKind::Projective && spec_.m % 2 == 1) continue;
            throw;
        }
        if (reps.insert(c.cls.support).second) classes.push_back(std::move(c.cls));
    }

    std::sort(classes.begin(), classes.end(), [](const CyclicClass& a, const CyclicClass& b) {
        if (a.j2 != b.j2) return a.j2 < b.j2;
        return support_string_less(a.support, b.support);
    });
    classes_ = std::move(classes);
    classes_built_ = true;
    return classes_;
}

}  // namespace fgqc
