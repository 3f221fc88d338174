#include "ehrhart_lab/io_json.hpp"

#include "ehrhart_lab/errors.hpp"

#include <string>
#include <vector>

namespace ehrhart_lab {

namespace {

Json point_to_json(const Point2& p) {
    return Json::array({rational_string(p.x), rational_string(p.y)});
}

Point2 point_from_json(const Json& j) {
    return {parse_rational(j.at(0).get<std::string>()),
            parse_rational(j.at(1).get<std::string>())};
}

Json points_to_json(const std::vector<Point2>& pts) {
    Json arr = Json::array();
    for (const Point2& p : pts) arr.push_back(point_to_json(p));
    return arr;
}

Json rationals_to_json(const std::vector<Rational>& vals) {
    Json arr = Json::array();
    for (const Rational& v : vals) arr.push_back(rational_string(v));
    return arr;
}

std::vector<Rational> rationals_from_json(const Json& j) {
    std::vector<Rational> vals;
    for (const Json& e : j) vals.push_back(parse_rational(e.get<std::string>()));
    return vals;
}

// Rethrows nlohmann's type/key errors as validation failures.
template <typename F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw InvalidParameter(std::string("malformed document: ") + e.what());
    }
}

} // namespace

Json polygon_to_json(const RationalPolygon& p) {
    Json j;
    j["vertices"] = points_to_json(p.vertices);
    return j;
}

RationalPolygon polygon_from_json(const Json& j) {
    return guarded([&] {
        std::vector<Point2> pts;
        for (const Json& e : j.at("vertices")) pts.push_back(point_from_json(e));
        return make_polygon(pts);
    });
}

Json qp_to_json(const QuasiPolynomial& qp) {
    Json j;
    j["period"] = qp.period;
    j["c0"] = rationals_to_json(qp.c0);
    j["c1"] = rationals_to_json(qp.c1);
    j["c2"] = rationals_to_json(qp.c2);
    return j;
}

QuasiPolynomial qp_from_json(const Json& j) {
    return guarded([&] {
        QuasiPolynomial qp;
        qp.period = j.at("period").get<long>();
        qp.c0 = rationals_from_json(j.at("c0"));
        qp.c1 = rationals_from_json(j.at("c1"));
        qp.c2 = rationals_from_json(j.at("c2"));
        const auto n = static_cast<std::size_t>(qp.period);
        if (qp.period < 1 || qp.c0.size() != n || qp.c1.size() != n || qp.c2.size() != n) {
            throw InvalidParameter("quasi-polynomial tables must have one entry per residue");
        }
        return qp;
    });
}

Json word_to_json(const GeneratorWord& w) {
    Json j;
    j["order"] = "paper-right-to-left";
    Json arr = Json::array();
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        Json letter;
        letter["a"] = rational_string(it->a);
        letter["b"] = it->b;
        arr.push_back(letter);
    }
    j["letters"] = arr;
    return j;
}

GeneratorWord word_from_json(const Json& j) {
    return guarded([&] {
        if (j.at("order").get<std::string>() != "paper-right-to-left") {
            throw InvalidParameter("word documents must declare order paper-right-to-left");
        }
        GeneratorWord w;
        const Json& arr = j.at("letters");
        for (auto it = arr.rbegin(); it != arr.rend(); ++it) {
            w.letters.push_back({parse_rational(it->at("a").get<std::string>()),
                                 it->at("b").get<long>()});
        }
        return w;
    });
}

Json matrix_to_json(const Mat2& m) {
    Json j;
    j["matrix"] = Json::array({Json::array({rational_string(m.a), rational_string(m.b)}),
                               Json::array({rational_string(m.c), rational_string(m.d)})});
    j["translation"] = point_to_json(m.t);
    return j;
}

Json certificate_to_json(const ConstructionCertificate& c) {
    Json j;
    j["polygon"] = polygon_to_json(c.polygon);
    Json claim;
    if (const auto* counts = std::get_if<CountClaim>(&c.claim)) {
        claim["interior"] = counts->interior;
        claim["boundary"] = counts->boundary;
    } else {
        const auto& p = std::get<PeriodClaim>(c.claim);
        claim["s"] = Json::array({p.s0, p.s1, p.s2});
    }
    j["claim"] = claim;
    j["verified"] = c.verified;
    return j;
}

Json periods_to_json(const PeriodSequence& s, const IndexSequence& ix) {
    Json j;
    j["s"] = Json::array({s.s0, s.s1, s.s2});
    j["quasi_period"] = s.quasi_period;
    j["j"] = Json::array({ix.j0, ix.j1, ix.j2});
    return j;
}

Json indices_to_json(const IndexSequence& ix) {
    Json j;
    j["j"] = Json::array({ix.j0, ix.j1, ix.j2});
    return j;
}

Json pip_report_to_json(const PipReport& r) {
    Json j;
    j["is_pip"] = r.is_pip;
    j["pick_defect"] = rational_string(r.pick_defect);
    j["boundary_scaling_ok"] = r.boundary_scaling_ok;
    return j;
}

Json reflexivity_to_json(const ReflexivityReport& r) {
    Json j;
    j["reflexive"] = r.reflexive;
    j["pseudo_reflexive"] = r.pseudo_reflexive;
    j["twelve"] = r.twelve;
    return j;
}

Json path_to_json(const PathReconstruction& p) {
    Json j;
    j["vertices"] = points_to_json(p.vertices);
    j["directions"] = points_to_json(p.directions);
    j["winding"] = p.winding;
    return j;
}

Json count_to_json(long n, long long count) {
    Json j;
    j["n"] = n;
    j["count"] = count;
    return j;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw InvalidParameter(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace ehrhart_lab
