#include "ehrhart_lab/constructions.hpp"
#include "ehrhart_lab/ehrhart.hpp"
#include "ehrhart_lab/errors.hpp"
#include "ehrhart_lab/io_json.hpp"
#include "ehrhart_lab/lattice_count.hpp"
#include "ehrhart_lab/reflexive.hpp"
#include "ehrhart_lab/scan.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace ehrhart_lab;

std::string read_input(const std::string& path) {
    std::ostringstream text;
    if (path == "-") {
        text << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InvalidParameter("cannot open input file: " + path);
        text << in.rdbuf();
    }
    return text.str();
}

RationalPolygon load_polygon(const std::string& path) {
    return polygon_from_json(parse_json_text(read_input(path)));
}

GeneratorWord load_word(const std::string& path) {
    return word_from_json(parse_json_text(read_input(path)));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InvalidParameter("cannot open output file: " + out_path);
    out << text;
}

std::string line(const Json& j) { return j.dump() + "\n"; }

ConstructionCertificate period_claim_certificate(RationalPolygon poly, long s0, long s1,
                                                 long s2) {
    const PeriodSequence ps = period_sequence(ehrhart_qp(poly));
    ConstructionCertificate cert;
    cert.claim = PeriodClaim{s0, s1, s2};
    cert.verified = ps.s0 == s0 && ps.s1 == s1 && ps.s2 == s2;
    cert.polygon = std::move(poly);
    return cert;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice-point counts, Ehrhart quasi-polynomials, period and index "
                 "sequences, and rational-polygon constructions"};
    app.require_subcommand(1);

    std::string in_path;
    std::string out_path;
    long n = 1;
    long param_i = 1, param_b = 1, param_r = 2, param_s = 2;
    long max_bbox = 0;
    long max_interior = 6, max_boundary = 18;
    bool pips = false;
    std::string anchor_x = "0", anchor_y = "0";
    PipScanOptions scan_opt;
    std::function<std::string()> action;

    const auto add_output = [&](CLI::App* sub) {
        sub->add_option("-o,--output", out_path, "write to a file instead of stdout");
    };
    const auto add_polygon_input = [&](CLI::App* sub) {
        sub->add_option("input", in_path, "polygon JSON file, or - for stdin")->required();
        add_output(sub);
    };

    CLI::App* count = app.add_subcommand("count", "lattice points of the n-th dilate");
    add_polygon_input(count);
    count->add_option("--n", n, "dilation factor")->default_val(1);
    count->callback([&] {
        action = [&] {
            const RationalPolygon p = load_polygon(in_path);
            return line(count_to_json(n, count_lattice_points(p, n)));
        };
    });

    CLI::App* oracle = app.add_subcommand("oracle-count", "same count via the per-point oracle");
    add_polygon_input(oracle);
    oracle->add_option("--n", n, "dilation factor")->default_val(1);
    oracle->callback([&] {
        action = [&] {
            const RationalPolygon p = load_polygon(in_path);
            return line(count_to_json(n, oracle_count(p, n)));
        };
    });

    CLI::App* ehr = app.add_subcommand("ehrhart", "fitted Ehrhart quasi-polynomial");
    add_polygon_input(ehr);
    ehr->callback([&] {
        action = [&] { return line(qp_to_json(ehrhart_qp(load_polygon(in_path)))); };
    });

    CLI::App* periods = app.add_subcommand("periods", "period and index sequences");
    add_polygon_input(periods);
    periods->callback([&] {
        action = [&] {
            const RationalPolygon p = load_polygon(in_path);
            return line(periods_to_json(period_sequence(ehrhart_qp(p)), index_sequence(p)));
        };
    });

    CLI::App* indices = app.add_subcommand("indices", "index sequence j0, j1, j2");
    add_polygon_input(indices);
    indices->callback([&] {
        action = [&] { return line(indices_to_json(index_sequence(load_polygon(in_path)))); };
    });

    CLI::App* report = app.add_subcommand("pip-report", "quasi-period-1 diagnostics");
    add_polygon_input(report);
    report->callback([&] {
        action = [&] { return line(pip_report_to_json(pip_report(load_polygon(in_path)))); };
    });

    CLI::App* construct = app.add_subcommand("construct", "named polygon families");
    construct->require_subcommand(1);

    CLI::App* scott = construct->add_subcommand("scott", "integral polygon with given counts");
    scott->add_option("--I", param_i, "interior lattice points")->required();
    scott->add_option("--b", param_b, "boundary lattice points")->required();
    scott->add_option("--max-bbox", max_bbox, "search box bound (0 = default)")->default_val(0);
    add_output(scott);
    scott->callback([&] {
        action = [&] {
            RationalPolygon p = max_bbox > 0 ? scott_polygon(param_i, param_b, max_bbox)
                                             : scott_polygon(param_i, param_b);
            const BoundaryInteriorCounts bi = boundary_interior(p);
            ConstructionCertificate cert;
            cert.claim = CountClaim{param_i, param_b};
            cert.verified = bi.interior == param_i && bi.boundary == param_b;
            cert.polygon = std::move(p);
            return line(certificate_to_json(cert));
        };
    });

    CLI::App* b1 = construct->add_subcommand("pip-b1", "boundary-1 triangle PIP");
    b1->add_option("--I", param_i, "interior lattice points")->required();
    add_output(b1);
    b1->callback([&] { action = [&] { return line(certificate_to_json(pip_b1(param_i))); }; });

    CLI::App* b2 = construct->add_subcommand("pip-b2", "boundary-2 quadrilateral PIP");
    b2->add_option("--I", param_i, "interior lattice points")->required();
    add_output(b2);
    b2->callback([&] { action = [&] { return line(certificate_to_json(pip_b2(param_i))); }; });

    CLI::App* hepta = construct->add_subcommand("heptagon", "period sequence (1, s, 1)");
    hepta->add_option("--s", param_s, "constant-term period")->required();
    add_output(hepta);
    hepta->callback([&] {
        action = [&] {
            return line(certificate_to_json(
                period_claim_certificate(heptagon_H(param_s).H, 1, param_s, 1)));
        };
    });

    CLI::App* tri = construct->add_subcommand("triangle-q", "period sequence (r, 1, 1)");
    tri->add_option("--r", param_r, "linear-term period")->required();
    tri->add_option("--anchor-x", anchor_x, "lattice anchor x")->default_val("0");
    tri->add_option("--anchor-y", anchor_y, "lattice anchor y")->default_val("0");
    add_output(tri);
    tri->callback([&] {
        action = [&] {
            const Point2 anchor{parse_rational(anchor_x), parse_rational(anchor_y)};
            return line(certificate_to_json(
                period_claim_certificate(triangle_Q(param_r, anchor), param_r, 1, 1)));
        };
    });

    CLI::App* per = construct->add_subcommand("period", "period sequence (r, s, 1)");
    per->add_option("--r", param_r, "linear-term period")->required();
    per->add_option("--s", param_s, "constant-term period")->required();
    add_output(per);
    per->callback([&] {
        action = [&] { return line(certificate_to_json(period_polygon(param_r, param_s))); };
    });

    CLI::App* dual = app.add_subcommand("dual", "polar dual polygon");
    add_polygon_input(dual);
    dual->callback([&] {
        action = [&] { return line(polygon_to_json(polar_dual(load_polygon(in_path)))); };
    });

    CLI::App* reflexive = app.add_subcommand("reflexive", "reflexivity report");
    add_polygon_input(reflexive);
    reflexive->callback([&] {
        action = [&] { return line(reflexivity_to_json(reflexivity_report(load_polygon(in_path)))); };
    });

    CLI::App* word = app.add_subcommand("word", "generator words of boundary paths");
    word->require_subcommand(1);

    CLI::App* wextract = word->add_subcommand("extract", "read the word off a polygon");
    add_polygon_input(wextract);
    wextract->callback([&] {
        action = [&] { return line(word_to_json(extract_word(load_polygon(in_path)))); };
    });

    CLI::App* wproduct = word->add_subcommand("product", "multiply the letters out");
    wproduct->add_option("input", in_path, "word JSON file, or - for stdin")->required();
    add_output(wproduct);
    wproduct->callback([&] {
        action = [&] { return line(matrix_to_json(word_product(load_word(in_path)))); };
    });

    CLI::App* wpath = word->add_subcommand("reconstruct", "run the path recursion");
    wpath->add_option("input", in_path, "word JSON file, or - for stdin")->required();
    add_output(wpath);
    wpath->callback([&] {
        action = [&] { return line(path_to_json(reconstruct_path(load_word(in_path)))); };
    });

    CLI::App* smap = app.add_subcommand("scott-map", "admissible (I, b) grid as CSV");
    smap->add_option("--max-I", max_interior, "largest interior count")->default_val(6);
    smap->add_option("--max-b", max_boundary, "largest boundary count")->default_val(18);
    smap->add_flag("--pips", pips, "add the known-PIP column");
    add_output(smap);
    smap->callback([&] {
        action = [&] { return scott_map_csv(max_interior, max_boundary, pips); };
    });

    CLI::App* pscan = app.add_subcommand("pip-scan", "grid search for quasi-period-1 polygons");
    pscan->add_option("--max-denominator", scan_opt.max_denominator, "densest vertex grid")
        ->default_val(4);
    pscan->add_option("--coordinate-bound", scan_opt.coordinate_bound, "vertex box half-width")
        ->default_val(3);
    pscan->add_option("--dilate-bound", scan_opt.dilate_bound, "extra verification depth")
        ->default_val(12);
    pscan->add_option("--max-vertices", scan_opt.max_vertices, "3 = triangles only")
        ->default_val(3);
    pscan->add_flag("--include-integral", scan_opt.include_integral,
                    "also list integral polygons");
    add_output(pscan);
    pscan->callback([&] { action = [&] { return pip_scan_csv(scan_opt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        emit(action(), out_path);
        return 0;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
