// zkit command-line interface: every library operation behind JSON-in /
// JSON-out subcommands, with seeded deterministic sampling and CSV emission
// for the numeric audits.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zkit/zkit.hpp"

namespace {

using zkit::Json;

struct GlobalOpts {
    std::size_t k = 1;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::size_t samples = 256;
    double tol = 1e-12;
    std::string in_path;
    std::string out_path;
};

std::uint64_t effective_seed(const GlobalOpts& g) {
    if (g.seed_set) return g.seed;
    if (const char* env = std::getenv("ZKIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw zkit::ParseError("ZKIT_SEED is not a valid unsigned integer");
        }
    }
    return g.seed;
}

Json read_input(const GlobalOpts& g) {
    if (g.in_path.empty()) throw zkit::ParseError("this subcommand requires --in FILE");
    std::ifstream in(g.in_path);
    if (!in) throw zkit::ParseError("cannot open input file: " + g.in_path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw zkit::ParseError(std::string("malformed JSON: ") + e.what());
    }
}

// Accepts strict JSON arrays of "num/den" strings and the bare form
// [1/1,-2/3] with the quotes left off.
Json parse_inline(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const Json::exception&) {
    }
    std::string quoted;
    quoted.reserve(text.size() + 8);
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '-' ||
                    text[j] == '/'))
                ++j;
            quoted += '"';
            quoted.append(text, i, j - i);
            quoted += '"';
            i = j;
        } else {
            quoted += c;
            ++i;
        }
    }
    try {
        return Json::parse(quoted);
    } catch (const Json::exception&) {
        throw zkit::ParseError(std::string("malformed inline JSON for ") + what + ": " + text);
    }
}

void emit(const GlobalOpts& g, const Json& payload) {
    Json out = payload;
    out["schema"] = zkit::kSchema;
    std::string text = out.dump(2) + "\n";
    if (g.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.out_path);
        if (!f) throw zkit::Error("IoError", "cannot open output file: " + g.out_path);
        f << text;
    }
}

void emit_text(const GlobalOpts& g, const std::string& text) {
    if (g.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.out_path);
        if (!f) throw zkit::Error("IoError", "cannot open output file: " + g.out_path);
        f << text;
    }
}

// shortest round-trip decimal form of a binary64
std::string fmt_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

zkit::Point parse_point_opt(const std::string& text, const char* what, std::size_t dim) {
    zkit::Point p = zkit::parse_point(parse_inline(text, what));
    if (p.dim() != dim)
        throw zkit::DimensionMismatch(std::string(what) + " must have dimension " +
                                      std::to_string(dim));
    return p;
}

zkit::Vector parse_vector_opt(const std::string& text, const char* what, std::size_t dim) {
    zkit::Vector v = zkit::parse_vector(parse_inline(text, what));
    if (v.dim() != dim)
        throw zkit::DimensionMismatch(std::string(what) + " must have dimension " +
                                      std::to_string(dim));
    return v;
}

std::vector<zkit::Axis> sample_axes(zkit::SplitMix64& rng, std::size_t count,
                                    const std::optional<zkit::Point>& through) {
    std::vector<zkit::Axis> axes;
    axes.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        // half through the distinguished point when one is given
        std::optional<zkit::Point> base =
            (through && i % 2 == 0) ? through : std::optional<zkit::Point>{};
        zkit::Point at = base ? *base : zkit::Point{rng.rat(), rng.rat()};
        zkit::Rat scale = rng.nonzero_rat();
        if (rng.below(2) == 0)
            axes.push_back(zkit::Axis::timelike_line(at, zkit::Vector{scale, scale * rng.slope()}));
        else
            axes.push_back(
                zkit::Axis::spacelike_line(at, zkit::Vector{scale * rng.slope(), scale}));
    }
    return axes;
}

Json demo(const GlobalOpts& g, const std::string& name);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for the fine causal topology on 1+1 Minkowski spacetime"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    GlobalOpts g;
    app.add_option("--k", g.k, "spatial dimension k (operations are exact for k = 1)");
    auto* seed_opt = app.add_option("--seed", g.seed, "64-bit seed for sampled subcommands");
    app.add_option("--samples", g.samples, "sample count for audits and axis checks");
    app.add_option("--tol", g.tol, "absolute tolerance for numeric margins");
    app.add_option("--in", g.in_path, "input JSON file");
    app.add_option("--out", g.out_path, "output file (defaults to stdout)");

    std::string v_text, base_text, dir_text, vertex_text, p_text, q_text, x_text, e_text;
    std::string o_text, t_text, s_text, t2_text, s2_text, ratio_text = "1/2", radius_text = "1";
    std::string demo_name = "list";
    double alpha = 1.0, beta = 1.0;
    std::size_t emit_count = 8, depth = 4, scan_axes = 8;
    long long power_n = 1;
    std::string scale_text = "1/2";

    auto* cmd_classify = app.add_subcommand("classify-vector", "causal class of a vector");
    cmd_classify->add_option("--v", v_text, "vector, e.g. [\"1/1\",\"1/1\"]")->required();

    auto* cmd_cone = app.add_subcommand("cone-intersect", "line/cone intersection parameters");
    cmd_cone->add_option("--base", base_text)->required();
    cmd_cone->add_option("--dir", dir_text)->required();
    cmd_cone->add_option("--vertex", vertex_text)->required();

    auto* cmd_region = app.add_subcommand("region-check",
                                          "sample axes and falsify openness (--in region)");
    cmd_region->add_option("--through", p_text, "distinguished point; half the axes pass it");

    auto* cmd_zb = app.add_subcommand("zeeman-ball", "certified punctured-ball open set");
    cmd_zb->add_option("--p", p_text)->required();
    cmd_zb->add_option("--radius", radius_text);

    auto* cmd_rat = app.add_subcommand("rationalize",
                                       "all-rational point inside a certified open (--in)");
    cmd_rat->add_option("--q", q_text)->required();

    auto* cmd_zc = app.add_subcommand("zeno-classify", "exact Zeno verdict for a family (--in)");
    cmd_zc->add_option("--emit", emit_count, "also emit the first N points");

    auto* cmd_zi = app.add_subcommand("zeno-inside",
                                      "Zeno family threaded through a certified open (--in)");
    cmd_zi->add_option("--p", p_text)->required();
    cmd_zi->add_option("--ratio", ratio_text);
    cmd_zi->add_option("--emit", emit_count);

    auto* cmd_rfc = app.add_subcommand(
        "refute-first-countable",
        "witnesses against a countable neighborhood base (--in chain, or --p with --depth)");
    cmd_rfc->add_option("--p", p_text);
    cmd_rfc->add_option("--depth", depth, "length of the default shrinking chain");

    auto* cmd_cd = app.add_subcommand("compact-decide", "both compactness routes plus cross-check");

    auto* cmd_cv = app.add_subcommand("certificate-verify",
                                      "recompute an axis-cover certificate (--in)");

    auto* cmd_fe = app.add_subcommand("f-eval", "evaluate the cone-discontinuous field");
    cmd_fe->add_option("--p", p_text)->required();
    cmd_fe->add_option("--e", e_text)->required();
    cmd_fe->add_option("--x", x_text)->required();
    cmd_fe->add_option("--alpha", alpha);
    cmd_fe->add_option("--beta", beta);

    auto* cmd_fs = app.add_subcommand("f-scan", "CSV continuity audit along sampled axes");
    cmd_fs->add_option("--p", p_text)->required();
    cmd_fs->add_option("--e", e_text)->required();
    cmd_fs->add_option("--alpha", alpha);
    cmd_fs->add_option("--beta", beta);
    cmd_fs->add_option("--axes", scan_axes, "number of sampled axes through p");
    cmd_fs->add_option("--scale", scale_text, "geometric step toward p");

    auto* cmd_w = app.add_subcommand("winding", "exact winding number (--in loop or --o/--t/--s)");
    cmd_w->add_option("--x", x_text)->required();
    cmd_w->add_option("--o", o_text);
    cmd_w->add_option("--t", t_text);
    cmd_w->add_option("--s", s_text);
    cmd_w->add_option("--power", power_n, "winding of the n-fold power loop");

    auto* cmd_d = app.add_subcommand("distinguish", "winding certificate for two loops");
    cmd_d->add_option("--o", o_text)->required();
    cmd_d->add_option("--t1", t_text)->required();
    cmd_d->add_option("--s1", s_text)->required();
    cmd_d->add_option("--t2", t2_text)->required();
    cmd_d->add_option("--s2", s2_text)->required();

    auto* cmd_zp = app.add_subcommand("z-path", "axis-covered path between two points");
    cmd_zp->add_option("--p", p_text)->required();
    cmd_zp->add_option("--q", q_text)->required();

    auto* cmd_demo = app.add_subcommand("demo", "named end-to-end reproductions");
    cmd_demo->add_option("--name", demo_name, "demo name, or 'list'");

    CLI11_PARSE(app, argc, argv);
    g.seed_set = seed_opt->count() > 0;
    const std::size_t dim = g.k + 1;

    try {
        if (*cmd_classify) {
            zkit::Vector v = parse_vector_opt(v_text, "--v", dim);
            emit(g, Json{{"class", zkit::to_string(zkit::causal_class(v))}});
        } else if (*cmd_cone) {
            zkit::Point base = parse_point_opt(base_text, "--base", dim);
            zkit::Vector dirv = parse_vector_opt(dir_text, "--dir", dim);
            zkit::Point vertex = parse_point_opt(vertex_text, "--vertex", dim);
            auto roots = zkit::line_cone_params(base, dirv, vertex);
            Json arr = Json::array();
            for (const auto& r : roots.roots) arr.push_back(zkit::to_json(r));
            emit(g, Json{{"all_reals", roots.all_reals}, {"roots", arr}});
        } else if (*cmd_region) {
            Json in = read_input(g);
            zkit::Region r = in.contains("region") ? zkit::parse_region(in.at("region"))
                                                   : zkit::parse_region(in);
            std::uint64_t seed = effective_seed(g);
            zkit::SplitMix64 rng(seed);
            std::optional<zkit::Point> through;
            if (!p_text.empty()) through = parse_point_opt(p_text, "--through", dim);
            auto axes = sample_axes(rng, g.samples, through);
            auto report = zkit::check_open_on_axes(r, axes);
            Json failures = Json::array();
            for (const auto& f : report.failures)
                failures.push_back(Json{{"axis", zkit::to_json(f.axis)},
                                        {"witness", zkit::to_json(f.witness)}});
            emit(g, Json{{"all_open", report.all_open},
                         {"failures", failures},
                         {"axes_sampled", axes.size()},
                         {"seed", seed}});
        } else if (*cmd_zb) {
            zkit::Point p = parse_point_opt(p_text, "--p", dim);
            emit(g, zkit::to_json(zkit::zeeman_ball(p, zkit::Rat::parse(radius_text))));
        } else if (*cmd_rat) {
            zkit::CertifiedOpen c = zkit::parse_certified(read_input(g));
            zkit::Point q = parse_point_opt(q_text, "--q", dim);
            zkit::Point out = zkit::rationalize(c, q);
            emit(g, Json{{"input", zkit::to_json(q)},
                         {"point", zkit::to_json(out)},
                         {"inside", zkit::contains(c.region(), out)}});
        } else if (*cmd_zc) {
            zkit::SequenceFamily fam = zkit::parse_family(read_input(g));
            Json out{{"verdict", zkit::to_json(zkit::classify(fam))}};
            Json pts = Json::array();
            for (std::size_t n = 0; n < emit_count && fam.has_point(n); ++n)
                pts.push_back(zkit::to_json(fam.point(n)));
            out["points"] = std::move(pts);
            emit(g, out);
        } else if (*cmd_zi) {
            zkit::CertifiedOpen c = zkit::parse_certified(read_input(g));
            zkit::Point p = parse_point_opt(p_text, "--p", dim);
            zkit::SequenceFamily fam =
                zkit::zeno_inside_open(c, p, zkit::Rat::parse(ratio_text));
            Json pts = Json::array();
            bool all_inside = true;
            for (std::size_t n = 0; n < emit_count; ++n) {
                zkit::Point x = fam.point(n);
                all_inside = all_inside && zkit::contains(c.region(), x);
                pts.push_back(zkit::to_json(x));
            }
            emit(g, Json{{"family", zkit::to_json(fam)},
                         {"points", pts},
                         {"all_inside", all_inside},
                         {"verdict", zkit::to_json(zkit::classify(fam))}});
        } else if (*cmd_rfc) {
            std::vector<zkit::CertifiedOpen> chain;
            zkit::Point p{zkit::Rat(0), zkit::Rat(0)};
            if (!g.in_path.empty()) {
                Json in = read_input(g);
                for (const auto& cj : in.at("neighborhoods"))
                    chain.push_back(zkit::parse_certified(cj));
                p = zkit::parse_point(in.at("p"));
            } else {
                if (p_text.empty())
                    throw zkit::ParseError("refute-first-countable needs --in or --p");
                p = parse_point_opt(p_text, "--p", dim);
                for (std::size_t j = 0; j < depth; ++j)
                    chain.push_back(
                        zkit::zeeman_ball(p, zkit::Rat(zkit::Int(1), zkit::Int(j + 1))));
            }
            auto res = zkit::first_countability_refuter(chain, p);
            Json witnesses = Json::array();
            for (const auto& w : res.witnesses)
                witnesses.push_back(Json{{"j", w.j},
                                         {"point", zkit::to_json(w.point)},
                                         {"in_U_j", true},
                                         {"in_U", false}});
            emit(g, Json{{"refuting_open", zkit::to_json(res.refuting_open)},
                         {"witnesses", witnesses}});
        } else if (*cmd_cd) {
            zkit::CompactCandidate K = zkit::parse_candidate(read_input(g));
            auto via_axes = zkit::decide_via_axes(K);
            auto via_zeno = zkit::decide_via_zeno(K);
            bool verified =
                !via_axes.compact || zkit::verify_certificate(K, *via_axes.certificate);
            Json out{{"compact", via_axes.compact},
                     {"agree", via_axes.compact == via_zeno.compact},
                     {"certificate_verified", verified},
                     {"via_axes", zkit::to_json(via_axes)},
                     {"via_zeno", zkit::to_json(via_zeno)}};
            if (via_axes.counterexample)
                out["counterexample"] = zkit::to_json(via_axes).at("counterexample");
            emit(g, out);
        } else if (*cmd_cv) {
            Json in = read_input(g);
            zkit::CompactCandidate K = zkit::parse_candidate(in.at("candidate"));
            zkit::AxisCoverCertificate cert = zkit::parse_cover(in.at("certificate"));
            emit(g, Json{{"valid", zkit::verify_certificate(K, cert)}});
        } else if (*cmd_fe) {
            zkit::ZFParams params(parse_point_opt(p_text, "--p", dim),
                                  parse_vector_opt(e_text, "--e", dim), alpha, beta);
            zkit::FValue f = zkit::eval_f_detail(params, parse_point_opt(x_text, "--x", dim));
            emit(g, Json{{"f", f.value}, {"case", f.case_name}});
        } else if (*cmd_fs) {
            zkit::Point p = parse_point_opt(p_text, "--p", 2);
            zkit::ZFParams params(p, parse_vector_opt(e_text, "--e", 2), alpha, beta);
            std::uint64_t seed = effective_seed(g);
            zkit::SplitMix64 rng(seed);
            std::ostringstream csv;
            csv << "axis_id,n,t,f,bound\n";
            for (std::size_t a = 0; a < scan_axes; ++a) {
                zkit::Rat scale = rng.nonzero_rat();
                zkit::Axis axis =
                    zkit::Axis::timelike_line(p, zkit::Vector{scale, scale * rng.slope()});
                auto rep = zkit::audit_axis_continuity(params, axis, g.samples,
                                                       zkit::Rat::parse(scale_text), g.tol);
                for (const auto& s : rep.samples)
                    csv << a << "," << s.n << "," << fmt_double(s.t.to_double()) << ","
                        << fmt_double(s.f) << "," << fmt_double(s.bound) << "\n";
            }
            std::cerr << "seed " << seed << "\n";
            emit_text(g, csv.str());
        } else if (*cmd_w) {
            zkit::Point x = parse_point_opt(x_text, "--x", 2);
            if (!o_text.empty()) {
                zkit::ParallelogramLoop P(parse_point_opt(o_text, "--o", 2),
                                          parse_vector_opt(t_text, "--t", 2),
                                          parse_vector_opt(s_text, "--s", 2));
                long w = power_n == 1 ? zkit::winding(P.loop(), x)
                                      : zkit::power_winding(P, power_n, x);
                emit(g, Json{{"winding", w}, {"power", power_n}});
            } else {
                zkit::Loop loop = zkit::parse_loop(read_input(g));
                emit(g, Json{{"winding", zkit::winding(loop, x)}});
            }
        } else if (*cmd_d) {
            zkit::Point o = parse_point_opt(o_text, "--o", 2);
            zkit::ParallelogramLoop P1(o, parse_vector_opt(t_text, "--t1", 2),
                                       parse_vector_opt(s_text, "--s1", 2));
            zkit::ParallelogramLoop P2(o, parse_vector_opt(t2_text, "--t2", 2),
                                       parse_vector_opt(s2_text, "--s2", 2));
            auto out = zkit::distinguish(P1, P2);
            if (out.not_separable_by_winding)
                emit(g, Json{{"outcome", "NotSeparableByWinding"}});
            else
                emit(g, Json{{"outcome", "certificate"},
                             {"certificate", zkit::to_json(*out.certificate)}});
        } else if (*cmd_zp) {
            zkit::ZPath path = zkit::z_path(parse_point_opt(p_text, "--p", 2),
                                            parse_point_opt(q_text, "--q", 2));
            emit(g, zkit::to_json(path));
        } else if (*cmd_demo) {
            emit(g, demo(g, demo_name));
        }
    } catch (const zkit::ParseError& e) {
        std::cout << Json{{"error", e.kind()}, {"detail", e.what()}}.dump(2) << "\n";
        return 2;
    } catch (const zkit::Error& e) {
        std::cout << Json{{"error", e.kind()}, {"detail", e.what()}}.dump(2) << "\n";
        return 1;
    } catch (const Json::exception& e) {
        std::cout << Json{{"error", "ParseError"}, {"detail", e.what()}}.dump(2) << "\n";
        return 2;
    }
    return 0;
}

namespace {

Json demo(const GlobalOpts& g, const std::string& name) {
    using namespace zkit;
    const Point O{Rat(0), Rat(0)};
    const std::vector<std::string> names = {
        "light-ray-discrete",  "lightlike-zeno", "axial-zeno",
        "compactness",         "not-locally-compact", "density",
        "not-first-countable", "zfunction",      "path-connected",
        "pi1-nontrivial"};
    if (name == "list") return Json{{"demos", names}};
    if (name == "light-ray-discrete") {
        // every light ray meets the punctured ball in its vertex alone
        CertifiedOpen zb = zeeman_ball(O, Rat(1));
        Json traces = Json::array();
        for (const Vector& d : {Vector{Rat(1), Rat(1)}, Vector{Rat(1), Rat(-1)}})
            traces.push_back(to_json(restrict_to_line(zb.region(), O, d)));
        return Json{{"demo", name},
                    {"statement",
                     "restricting the certified punctured ball to both light rays through "
                     "its center leaves exactly the single parameter 0"},
                    {"ray_traces", traces}};
    }
    if (name == "lightlike-zeno") {
        auto fam = SequenceFamily::cone_sequence(O, Vector{Rat(1), Rat(1)}, Rat(Int(1), Int(2)));
        CertifiedOpen u = separating_neighborhood(fam);
        Json excluded = Json::array();
        for (std::size_t n = 0; n < 8; ++n)
            excluded.push_back(Json{{"n", n},
                                    {"point", to_json(fam.point(n))},
                                    {"inside", contains(u.region(), fam.point(n))}});
        return Json{{"demo", name},
                    {"verdict", to_json(classify(fam))},
                    {"separating_open", to_json(u)},
                    {"contains_limit", contains(u.region(), fam.limit())},
                    {"excluded_prefix", excluded}};
    }
    if (name == "axial-zeno") {
        auto fam = SequenceFamily::rotating_axial(O, Rat(Int(1), Int(2)));
        CertifiedOpen u = separating_neighborhood(fam);
        return Json{{"demo", name},
                    {"verdict", to_json(classify(fam))},
                    {"separating_open_certificate", u.certificate_kind()},
                    {"contains_limit", contains(u.region(), O)},
                    {"first_point_excluded", !contains(u.region(), fam.point(0))}};
    }
    if (name == "compactness") {
        CompactCandidate K;
        K.add_segment(O, Point{Rat(2), Rat(1)});
        K.add_completed_zeno(
            SequenceFamily::geometric_on_line(O, Vector{Rat(1), Rat(0)}, Rat(Int(1), Int(2))));
        auto a = decide_via_axes(K);
        auto z = decide_via_zeno(K);
        CompactCandidate bad = K;
        bad.add_segment(O, Point{Rat(3), Rat(3)});
        return Json{{"demo", name},
                    {"candidate", to_json(K)},
                    {"via_axes", to_json(a)},
                    {"via_zeno", to_json(z)},
                    {"certificate_verified", verify_certificate(K, *a.certificate)},
                    {"with_lightlike_segment", to_json(decide_via_axes(bad))}};
    }
    if (name == "not-locally-compact") {
        CertifiedOpen c = zeeman_ball(O, Rat(1));
        SequenceFamily fam = not_locally_compact_witness(c, O);
        Json pts = Json::array();
        for (std::size_t n = 0; n < 8; ++n) pts.push_back(to_json(fam.point(n)));
        return Json{{"demo", name},
                    {"witness_family", to_json(fam)},
                    {"inside_points", pts},
                    {"verdict", to_json(classify(fam))}};
    }
    if (name == "density") {
        CertifiedOpen c = zeeman_ball(O, Rat(1));
        Point q{Rat(Int(1), Int(3)), Rat(Int(1), Int(7))};
        Point out = rationalize(c, q);
        return Json{{"demo", name},
                    {"input", to_json(q)},
                    {"rational_point", to_json(out)},
                    {"inside", contains(c.region(), out)}};
    }
    if (name == "not-first-countable") {
        std::vector<CertifiedOpen> chain;
        for (std::size_t j = 0; j < 4; ++j)
            chain.push_back(zeeman_ball(O, Rat(Int(1), Int(j + 1))));
        auto res = first_countability_refuter(chain, O);
        Json witnesses = Json::array();
        for (const auto& w : res.witnesses)
            witnesses.push_back(Json{{"j", w.j}, {"point", to_json(w.point)}});
        return Json{{"demo", name},
                    {"witnesses", witnesses},
                    {"refuting_certificate", res.refuting_open.certificate_kind()}};
    }
    if (name == "zfunction") {
        ZFParams params(O, Vector{Rat(1), Rat(0)});
        auto disc = audit_n_discontinuity(params, 6);
        Axis axis = Axis::timelike_line(O, Vector{Rat(2), Rat(1)});
        auto audit = audit_axis_continuity(params, axis, 20, Rat(Int(1), Int(2)), g.tol);
        return Json{{"demo", name},
                    {"cone_values_exact", disc.witness_exact},
                    {"f_at_vertex", disc.f_at_vertex},
                    {"axis_bound_ok", audit.bound_ok},
                    {"axis_tail", audit.tail_max}};
    }
    if (name == "path-connected") {
        ZPath path = z_path(O, Point{Rat(2), Rat(2)});
        return Json{{"demo", name}, {"path", to_json(path)}};
    }
    if (name == "pi1-nontrivial") {
        ParallelogramLoop P1(O, Vector{Rat(1), Rat(0)}, Vector{Rat(0), Rat(1)});
        ParallelogramLoop P2(O, Vector{Rat(2), Rat(0)}, Vector{Rat(0), Rat(1)});
        auto out = distinguish(P1, P2);
        Point center{Rat(Int(1), Int(2)), Rat(Int(1), Int(2))};
        Json powers = Json::array();
        for (long n = -3; n <= 3; ++n)
            powers.push_back(Json{{"n", n}, {"winding", power_winding(P1, n, center)}});
        return Json{{"demo", name},
                    {"certificate", to_json(*out.certificate)},
                    {"power_windings", powers}};
    }
    throw ParseError("unknown demo: " + name + " (try --name list)");
}

}  // namespace
