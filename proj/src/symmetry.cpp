#include "quasigeo/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

namespace qg {

namespace {

// Centered coordinates doubled to stay integral: c(v) = 2 * coord - dims.
std::array<Rational, 3> centered(const BoxGeometry& g, VertexId v) {
    std::array<Rational, 3> out;
    for (int i = 0; i < 3; ++i)
        out[i] = 2 * g.vertex_coord(v)[i] - g.dims()[i];
    return out;
}

std::array<Rational, 3> apply_mat(const std::array<std::array<int, 3>, 3>& m,
                                  const std::array<Rational, 3>& p) {
    std::array<Rational, 3> out;
    for (int i = 0; i < 3; ++i) {
        out[i] = 0;
        for (int j = 0; j < 3; ++j)
            if (m[i][j] != 0) out[i] += m[i][j] * p[j];
    }
    return out;
}

std::array<int, 3> apply_mat_int(const std::array<std::array<int, 3>, 3>& m,
                                 const std::array<int, 3>& p) {
    std::array<int, 3> out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i] += m[i][j] * p[j];
    return out;
}

int det3(const std::array<std::array<int, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<int, 3> face_normal(FaceId f) {
    switch (f) {
        case FaceId::F: return {0, -1, 0};
        case FaceId::R: return {1, 0, 0};
        case FaceId::T: return {0, 0, 1};
        case FaceId::K: return {0, 1, 0};
        case FaceId::L: return {-1, 0, 0};
        default: return {0, 0, -1};
    }
}

FaceId face_of_normal(const std::array<int, 3>& n) {
    for (FaceId f : kAllFaces) {
        auto fn = face_normal(f);
        if (fn[0] == n[0] && fn[1] == n[1] && fn[2] == n[2]) return f;
    }
    throw std::logic_error("not a face normal");
}

}  // namespace

bool SymmetryOp::is_identity() const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (mat[i][j] != (i == j)) return false;
    return true;
}

std::vector<SymmetryOp> symmetry_group(const BoxGeometry& geom) {
    std::vector<SymmetryOp> out;
    int perm[3] = {0, 1, 2};
    do {
        for (int signs = 0; signs < 8; ++signs) {
            SymmetryOp op;
            for (int i = 0; i < 3; ++i)
                op.mat[i][perm[i]] = (signs >> i) & 1 ? -1 : 1;
            // The box is preserved iff permuted axes have equal extents.
            bool keeps_dims = true;
            for (int i = 0; i < 3; ++i)
                keeps_dims = keeps_dims && geom.dims()[perm[i]] == geom.dims()[i];
            if (!keeps_dims) continue;
            op.is_rotation = det3(op.mat) > 0;
            bool ok = true;
            for (VertexId v = 1; v <= 8 && ok; ++v) {
                auto img = apply_mat(op.mat, centered(geom, v));
                int hit = 0;
                for (VertexId w = 1; w <= 8; ++w)
                    if (centered(geom, w) == img) hit = w;
                if (hit == 0) ok = false;
                op.vperm[v] = hit;
            }
            if (!ok) continue;
            for (FaceId f : kAllFaces)
                op.fperm[face_index(f)] =
                    face_of_normal(apply_mat_int(op.mat, face_normal(f)));
            out.push_back(op);
        }
    } while (std::next_permutation(perm, perm + 3));
    return out;
}

std::vector<SymmetryOp> rotation_subgroup(const std::vector<SymmetryOp>& group) {
    std::vector<SymmetryOp> out;
    for (const auto& op : group)
        if (op.is_rotation) out.push_back(op);
    return out;
}

SymmetryOp compose(const SymmetryOp& outer, const SymmetryOp& inner) {
    SymmetryOp op;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            op.mat[i][j] = 0;
            for (int k = 0; k < 3; ++k)
                op.mat[i][j] += outer.mat[i][k] * inner.mat[k][j];
        }
    for (VertexId v = 1; v <= 8; ++v) op.vperm[v] = outer.vperm[inner.vperm[v]];
    for (FaceId f : kAllFaces)
        op.fperm[face_index(f)] =
            outer.fperm[face_index(inner.fperm[face_index(f)])];
    op.is_rotation = det3(op.mat) > 0;
    return op;
}

GeodesicSegment apply(const BoxGeometry& geom, const SymmetryOp& op,
                      const GeodesicSegment& s) {
    VertexId nv = op.vperm[s.start];
    FaceId nf = op.fperm[face_index(s.start_face)];
    // Chart direction as a 3D tangent, mapped, then back into the image chart.
    const auto& u = geom.chart_u_axis(s.start_face);
    const auto& v = geom.chart_v_axis(s.start_face);
    std::array<int, 3> tangent{};
    for (int i = 0; i < 3; ++i)
        tangent[i] =
            static_cast<int>(s.dir.x) * u[i] + static_cast<int>(s.dir.y) * v[i];
    auto img = apply_mat_int(op.mat, tangent);
    const auto& nu = geom.chart_u_axis(nf);
    const auto& nvax = geom.chart_v_axis(nf);
    long long dx = 0, dy = 0;
    for (int i = 0; i < 3; ++i) {
        dx += static_cast<long long>(img[i]) * nu[i];
        dy += static_cast<long long>(img[i]) * nvax[i];
    }
    TraceOutcome t = trace_ray(geom, nv, nf, Dir2{dx, dy},
                               static_cast<int>(s.crossings.size()) + 1);
    if (t.kind != TraceOutcome::Kind::segment || t.segment.end != op.vperm[s.end] ||
        t.segment.length_sq != s.length_sq)
        throw std::logic_error("symmetry image of a segment failed to re-trace");
    return t.segment;
}

QuasiGeo apply(const BoxGeometry& geom, const SymmetryOp& op, const QuasiGeo& q) {
    std::vector<GeodesicSegment> cycle;
    cycle.reserve(q.cycle.size());
    for (const auto& s : q.cycle) cycle.push_back(apply(geom, op, s));
    return make_quasigeo(geom, cycle);
}

namespace {

std::string slope_multiset_key(const QuasiGeo& q) {
    std::vector<std::string> slopes;
    for (const auto& s : q.cycle)
        slopes.push_back(to_string(normalized_slope(s.dir)));
    std::sort(slopes.begin(), slopes.end());
    std::string out;
    for (const auto& s : slopes) out += s + ";";
    return out;
}

}  // namespace

std::vector<CanonicalClass> reduce_to_classes(
    const BoxGeometry& geom, const std::map<std::string, QuasiGeo>& labeled,
    const std::vector<SymmetryOp>& group) {
    std::vector<CanonicalClass> classes;
    std::set<std::string> assigned;
    for (const auto& [key, q] : labeled) {
        if (assigned.count(key)) continue;
        std::map<std::string, QuasiGeo> orbit;
        for (const auto& op : group) {
            QuasiGeo img = apply(geom, op, q);
            orbit.emplace(img.key, std::move(img));
        }
        for (const auto& [okey, oq] : orbit) {
            if (!labeled.count(okey))
                throw std::logic_error("input set is not closed under the group action");
            assigned.insert(okey);
        }
        CanonicalClass cls;
        cls.representative = orbit.begin()->second;
        cls.orbit_size = static_cast<int>(orbit.size());
        if (static_cast<int>(group.size()) % cls.orbit_size != 0)
            throw std::logic_error("orbit size does not divide the group order");
        cls.stabilizer_size = static_cast<int>(group.size()) / cls.orbit_size;
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const CanonicalClass& a, const CanonicalClass& b) {
                  if (a.representative.category != b.representative.category)
                      return a.representative.category < b.representative.category;
                  std::string sa = slope_multiset_key(a.representative);
                  std::string sb = slope_multiset_key(b.representative);
                  if (sa != sb) return sa < sb;
                  return a.representative.key < b.representative.key;
              });
    return classes;
}

}  // namespace qg
