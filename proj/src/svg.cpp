#include "quasigeo/svg.hpp"

#include <sstream>
#include <stdexcept>

namespace qg {

namespace {

struct NetLayout {
    std::array<PlanarTransform, 6> place;  // chart -> net plane (F's plane)
    Rational xmin, xmax, ymin, ymax;
};

NetLayout net_layout(const BoxGeometry& geom) {
    NetLayout net;
    auto assign = [&](FaceId f, std::initializer_list<FaceId> path) {
        std::vector<FaceId> p(path);
        net.place[face_index(f)] = develop(geom, p).back();
    };
    assign(FaceId::F, {FaceId::F});
    assign(FaceId::R, {FaceId::F, FaceId::R});
    assign(FaceId::K, {FaceId::F, FaceId::R, FaceId::K});
    assign(FaceId::L, {FaceId::F, FaceId::L});
    assign(FaceId::T, {FaceId::F, FaceId::T});
    assign(FaceId::B, {FaceId::F, FaceId::B});
    bool first = true;
    for (FaceId f : kAllFaces)
        for (int c = 0; c < 4; ++c) {
            Vec2q p = net.place[face_index(f)].apply(geom.corner_pos(f, c));
            if (first || p.x < net.xmin) net.xmin = p.x;
            if (first || p.x > net.xmax) net.xmax = p.x;
            if (first || p.y < net.ymin) net.ymin = p.y;
            if (first || p.y > net.ymax) net.ymax = p.y;
            first = false;
        }
    return net;
}

// One drawing primitive: a chart segment on a face.
struct CurvePiece {
    FaceId face;
    Seg2 seg;
};

std::string render(const BoxGeometry& geom, const std::vector<CurvePiece>& curve,
                   const std::string& title) {
    NetLayout net = net_layout(geom);
    const Rational scale = 96;
    const Rational margin = 24;
    auto sx = [&](const Rational& x) {
        return to_decimal((x - net.xmin) * scale + margin, 6);
    };
    auto sy = [&](const Rational& y) {
        // SVG y axis points down.
        return to_decimal((net.ymax - y) * scale + margin, 6);
    };
    Rational wq = (net.xmax - net.xmin) * scale + 2 * margin;
    Rational hq = (net.ymax - net.ymin) * scale + 2 * margin;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << to_decimal(wq, 2)
       << "\" height=\"" << to_decimal(hq, 2) << "\" viewBox=\"0 0 "
       << to_decimal(wq, 2) << " " << to_decimal(hq, 2) << "\">\n";
    os << "  <title>" << title << "</title>\n";
    os << "  <g fill=\"none\" stroke=\"#888\" stroke-width=\"1\">\n";
    for (FaceId f : kAllFaces) {
        const PlanarTransform& t = net.place[face_index(f)];
        os << "    <polygon points=\"";
        for (int c = 0; c < 4; ++c) {
            Vec2q p = t.apply(geom.corner_pos(f, c));
            os << (c ? " " : "") << sx(p.x) << "," << sy(p.y);
        }
        os << "\"/>\n";
    }
    os << "  </g>\n";
    os << "  <g font-family=\"sans-serif\" font-size=\"14\" fill=\"#444\" "
          "text-anchor=\"middle\">\n";
    for (FaceId f : kAllFaces) {
        const PlanarTransform& t = net.place[face_index(f)];
        Vec2q center = t.apply({geom.width(f) / 2, geom.height(f) / 2});
        os << "    <text x=\"" << sx(center.x) << "\" y=\"" << sy(center.y)
           << "\">" << face_name(f) << "</text>\n";
    }
    os << "  </g>\n";
    os << "  <g stroke=\"#c22\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
    for (const auto& piece : curve) {
        const PlanarTransform& t = net.place[face_index(piece.face)];
        Vec2q a = t.apply(piece.seg.a);
        Vec2q b = t.apply(piece.seg.b);
        os << "    <line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\""
           << sx(b.x) << "\" y2=\"" << sy(b.y) << "\"/>\n";
    }
    os << "  </g>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string svg_net_quasigeo(const BoxGeometry& geom, const QuasiGeo& q,
                             const std::string& title) {
    for (const auto& s : q.cycle)
        for (const auto& c : s.crossings)
            if (!face_point_in_chart(geom, {c.face, c.entry.x, c.entry.y}))
                throw std::invalid_argument("curve does not fit this geometry");
    std::vector<CurvePiece> curve;
    for (const auto& s : q.cycle)
        for (const auto& c : s.crossings)
            curve.push_back({c.face, {c.entry, c.exit}});
    return render(geom, curve, title);
}

std::string svg_net_geodesic(const BoxGeometry& cube, KnownGeodesic which) {
    if (!cube.is_cube())
        throw std::invalid_argument("the fixed closed geodesics are cube curves");
    const Rational half = Rational(1) / 2;
    const Rational one = 1;
    std::vector<CurvePiece> curve;
    switch (which) {
        case KnownGeodesic::equator:
            // Mid-height band across the four side faces.
            for (FaceId f : {FaceId::F, FaceId::R, FaceId::K, FaceId::L})
                curve.push_back({f, {{0, half}, {one, half}}});
            return render(cube, curve, "equatorial geodesic");
        case KnownGeodesic::hexagon_a:
            // The plane x + y + z = 3/2 cut, through six edge midpoints.
            curve = {
                {FaceId::F, {{half, one}, {one, half}}},
                {FaceId::R, {{0, half}, {half, 0}}},
                {FaceId::B, {{0, half}, {half, one}}},
                {FaceId::K, {{half, 0}, {one, half}}},
                {FaceId::L, {{0, half}, {half, one}}},
                {FaceId::T, {{0, half}, {half, 0}}},
            };
            return render(cube, curve, "hexagonal geodesic");
        case KnownGeodesic::hexagon_b:
            // The mirror hexagon, x + y - z = 1/2.
            curve = {
                {FaceId::F, {{half, 0}, {one, half}}},
                {FaceId::R, {{0, half}, {half, one}}},
                {FaceId::T, {{one, half}, {half, one}}},
                {FaceId::K, {{half, one}, {one, half}}},
                {FaceId::L, {{0, half}, {half, 0}}},
                {FaceId::B, {{one, half}, {half, 0}}},
            };
            return render(cube, curve, "skew hexagonal geodesic");
    }
    throw std::invalid_argument("unknown geodesic");
}

}  // namespace qg
