#include "quasigeo/json_io.hpp"

namespace qg {

std::vector<std::string> class_ids(const std::vector<CanonicalClass>& classes) {
    std::vector<std::string> out;
    std::map<char, int> counters;
    for (const auto& cls : classes) {
        char cat = cls.representative.category;
        char letter = (cat >= 'A' && cat <= 'E') ? cat : 'Q';
        out.push_back(std::string(1, letter) + std::to_string(++counters[letter]));
    }
    return out;
}

Json segment_to_json(const BoxGeometry& geom, const GeodesicSegment& s) {
    Json j;
    j["from"] = s.start;
    j["to"] = s.end;
    j["slope"] = to_string(normalized_slope(s.dir));
    Json faces = Json::array();
    for (const auto& c : s.crossings) faces.push_back(face_name(c.face));
    j["faces"] = faces;
    j["length_sq"] = to_string(s.length_sq);
    return j;
}

Json inventory_to_json(const BoxGeometry& geom, int group_order,
                       long long labeled_count, long long raw_emissions,
                       const std::vector<CanonicalClass>& classes) {
    Json j;
    Json dims = Json::array();
    for (const auto& d : geom.dims()) dims.push_back(to_string(d));
    j["geometry"] = Json{{"dims", dims}};
    j["group_order"] = group_order;
    // Labeled curves are counted up to cyclic rotation and reversal of the
    // traversal; raw_emissions counts every DFS closure before that dedup.
    j["labeled_count"] = labeled_count;
    j["labeled_count_convention"] =
        "distinct labeled curves up to traversal rotation and reversal";
    j["raw_emissions"] = raw_emissions;
    Json arr = Json::array();
    auto ids = class_ids(classes);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& cls = classes[i];
        Json c;
        c["id"] = ids[i];
        c["category"] = std::string(1, cls.representative.category);
        c["vertex_cycle"] = cls.representative.vertex_cycle;
        Json segs = Json::array();
        for (const auto& s : cls.representative.cycle)
            segs.push_back(segment_to_json(geom, s));
        c["segments"] = segs;
        c["orbit_size"] = cls.orbit_size;
        c["stabilizer_size"] = cls.stabilizer_size;
        arr.push_back(c);
    }
    j["classes"] = arr;
    return j;
}

Json segments_to_json(const BoxGeometry& geom,
                      const std::map<std::string, GeodesicSegment>& segments) {
    Json j;
    Json dims = Json::array();
    for (const auto& d : geom.dims()) dims.push_back(to_string(d));
    j["geometry"] = Json{{"dims", dims}};
    j["count"] = segments.size();
    Json arr = Json::array();
    for (const auto& [key, s] : segments) arr.push_back(segment_to_json(geom, s));
    j["segments"] = arr;
    return j;
}

namespace {

const char* record_kind_name(ObstructionRecord::Kind k) {
    switch (k) {
        case ObstructionRecord::Kind::cone_crossing: return "cone_crossing";
        case ObstructionRecord::Kind::ray_crossing: return "ray_crossing";
        case ObstructionRecord::Kind::ray_self_crossing: return "ray_self_crossing";
        case ObstructionRecord::Kind::chain_candidate: return "chain_candidate";
        case ObstructionRecord::Kind::sharp_angle: return "sharp_angle";
        case ObstructionRecord::Kind::vertex_reuse: return "vertex_reuse";
        default: return "budget_exhausted";
    }
}

Json ray_to_json(const VertexRay& r) {
    Json j;
    j["vertex"] = r.v;
    j["face"] = face_name(r.face);
    j["dir"] = std::to_string(r.d.y) + "/" + std::to_string(r.d.x);
    return j;
}

}  // namespace

Json certificate_to_json(const ObstructionCertificate& cert) {
    Json j;
    j["slope"] = to_string(cert.slope);
    j["case"] = cert.case_index;
    j["complete"] = cert.complete;
    j["deepest_chain"] = cert.deepest_chain;
    Json arr = Json::array();
    for (const auto& rec : cert.records) {
        Json r;
        r["kind"] = record_kind_name(rec.kind);
        r["depth"] = rec.depth;
        r["at_vertex"] = rec.at_vertex;
        r["dir_lo"] = ray_to_json(rec.dir_lo);
        r["dir_hi"] = ray_to_json(rec.dir_hi);
        switch (rec.kind) {
            case ObstructionRecord::Kind::cone_crossing:
            case ObstructionRecord::Kind::ray_crossing:
                r["witness"] = rec.witness.str();
                r["witness_face"] = face_name(rec.witness_face);
                r["crossed_target"] = rec.crossed_target;
                break;
            case ObstructionRecord::Kind::ray_self_crossing:
                r["witness"] = rec.witness.str();
                break;
            case ObstructionRecord::Kind::chain_candidate:
            case ObstructionRecord::Kind::sharp_angle:
            case ObstructionRecord::Kind::vertex_reuse:
                r["reached"] = rec.reached;
                r["candidate_length_sq"] = to_string(rec.candidate_length_sq);
                r["junction_valid"] = rec.junction_valid;
                break;
            default:
                break;
        }
        arr.push_back(r);
    }
    j["records"] = arr;
    return j;
}

Json self_crossing_to_json(const Rational& slope, const SelfCrossingResult& r) {
    Json j;
    j["slope"] = to_string(slope);
    j["self_crossing"] = r.self_crossing;
    j["on_start_face"] = r.on_start_face;
    j["perpendicular"] = r.perpendicular;
    if (r.self_crossing) {
        j["witness_face"] = face_name(r.witness.face);
        j["witness_u"] = to_string(r.witness.u);
        j["witness_v"] = to_string(r.witness.v);
    }
    return j;
}

}  // namespace qg
