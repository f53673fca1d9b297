#include "quasigeo/verify.hpp"

#include "quasigeo/lemma.hpp"

#include <sstream>

namespace qg {

namespace {

std::string where(const QuasiGeo& q, int i) {
    std::ostringstream os;
    os << "segment " << i << " (v" << q.cycle[i].start << "->v" << q.cycle[i].end
       << ") of " << q.key.substr(0, 40);
    return os.str();
}

}  // namespace

VerifyReport verify_quasigeo(const BoxGeometry& geom, const QuasiGeo& q) {
    VerifyReport rep;
    int m = q.size();
    if (m == 0) {
        rep.fail("empty cycle");
        return rep;
    }

    // Re-trace every segment from scratch.
    for (int i = 0; i < m; ++i) {
        const GeodesicSegment& s = q.cycle[i];
        TraceOutcome t = trace_ray(geom, s.start, s.start_face, s.dir,
                                   static_cast<int>(s.crossings.size()) + 1);
        if (t.kind != TraceOutcome::Kind::segment) {
            rep.fail("re-trace did not terminate at a vertex: " + where(q, i));
            continue;
        }
        const GeodesicSegment& r = t.segment;
        bool same = r.end == s.end && r.length_sq == s.length_sq &&
                    r.crossings.size() == s.crossings.size();
        for (std::size_t c = 0; same && c < r.crossings.size(); ++c)
            same = r.crossings[c].face == s.crossings[c].face &&
                   r.crossings[c].entry == s.crossings[c].entry &&
                   r.crossings[c].exit == s.crossings[c].exit;
        if (!same) rep.fail("re-trace disagrees with stored data: " + where(q, i));
    }

    // Closure and junction angles, both sides, with the exact angle sum.
    for (int i = 0; i < m; ++i) {
        const GeodesicSegment& prev = q.cycle[(i + m - 1) % m];
        const GeodesicSegment& cur = q.cycle[i];
        if (prev.end != cur.start) {
            rep.fail("cycle does not close at " + where(q, i));
            continue;
        }
        SideAngles sa = side_angles(geom, cur.start, prev.end_face(),
                                    prev.arrival_dir, cur.start_face, cur.dir);
        if (!(sa.left + sa.right == ExactAngle::right_angles(3)))
            rep.fail("side angles do not sum to 3pi/2 at " + where(q, i));
        if (!sa.left.leq_pi() || !sa.right.leq_pi())
            rep.fail("junction angle exceeds pi at " + where(q, i));
    }

    // Full cyclic pairwise surface-intersection check.
    Chain chain{q.cycle};
    bool closes = q.cycle.back().end == q.cycle.front().start;
    if (closes && !simple_check(geom, chain, true))
        rep.fail("cycle is not simple: " + q.key.substr(0, 40));

    return rep;
}

VerifyReport verify_classes(const BoxGeometry& geom,
                            const std::vector<CanonicalClass>& classes,
                            int group_order, bool check_corollary) {
    VerifyReport rep;
    std::vector<QuasiGeo> reps;
    for (const auto& cls : classes) {
        VerifyReport one = verify_quasigeo(geom, cls.representative);
        for (auto& f : one.failures) rep.fail(std::move(f));
        if (cls.orbit_size * cls.stabilizer_size != group_order) {
            std::ostringstream os;
            os << "orbit " << cls.orbit_size << " x stabilizer "
               << cls.stabilizer_size << " != group order " << group_order;
            rep.fail(os.str());
        }
        reps.push_back(cls.representative);
    }
    if (check_corollary && !verify_corollary_classes(geom, reps))
        rep.fail("a quasigeodesic crosses some face more than once");
    return rep;
}

}  // namespace qg
