// Command line front end: every subcommand prints deterministic output (no
// timestamps or timings unless asked), rationals as "p/q", polynomials as
// coefficient lists in the JSON format and human form in tables.
#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "parhiggs/arrangement.hpp"
#include "parhiggs/betti.hpp"
#include "parhiggs/checks.hpp"
#include "parhiggs/errors.hpp"
#include "parhiggs/morse.hpp"
#include "parhiggs/numeric.hpp"
#include "parhiggs/parabolic.hpp"
#include "parhiggs/poly.hpp"
#include "parhiggs/stability.hpp"

namespace {

using njson = nlohmann::ordered_json;
using namespace parhiggs;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

njson poly_json(const IntPoly& p) { return njson::parse(p.json()); }

njson evec_json(const EVector& e) {
    njson a = njson::array();
    for (auto b : e.bits) a.push_back(static_cast<int>(b));
    return a;
}

njson wall_json(const Wall& w) { return njson{{"d", w.d}, {"e", evec_json(w.e)}}; }

njson weights_json(const WeightVector& w) {
    njson a = njson::array();
    for (const BigRat& r : w.alpha) a.push_back(rat_string(r));
    return a;
}

void print_json(const njson& j) { std::cout << j.dump(2) << "\n"; }

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    auto line = [](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += csv_cell(cells[i]);
        }
        std::cout << out << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
}

void print_aligned(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i)
            width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out += cells[i];
            if (i + 1 < cells.size()) out += std::string(width[i] - cells[i].size() + 2, ' ');
        }
        std::cout << out << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
}

// "field: value" lines for table mode, "field,value" rows for csv mode.
void print_fields(const std::string& format,
                  const std::vector<std::pair<std::string, std::string>>& fields) {
    if (format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [k, v] : fields) rows.push_back({k, v});
        print_csv({"field", "value"}, rows);
        return;
    }
    for (const auto& [k, v] : fields) std::cout << k << ": " << v << "\n";
}

struct CurveOpts {
    i64 genus = 0;
    i64 points = 3;
};

// Shifts alpha_i by prime(i) * scale / 10^6 -- a deterministic nudge off a
// wall. The result must still be inside the open cube.
WeightVector weights_from(const Curve& c, const std::string& csv, i64 perturb) {
    WeightVector w = parse_weights(c, csv);
    if (perturb == 0) return w;
    std::vector<BigRat> a = w.alpha;
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += BigRat(nth_prime(static_cast<i64>(i) + 1) * perturb, 1000000);
    return make_weights(c, a);
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

// ---------------------------------------------------------------- walls ----
void run_walls(const CurveOpts& o, const std::string& format) {
    Curve c = make_curve(o.genus, o.points);
    std::vector<Wall> walls = enumerate_walls(c);
    if (format == "json") {
        njson j{{"genus", c.genus}, {"points", c.points},
                {"count", static_cast<i64>(walls.size())}};
        njson arr = njson::array(), van = njson::array();
        for (const Wall& w : walls) {
            arr.push_back(wall_json(w));
            if (is_vanishing_wall(w, c)) van.push_back(wall_json(w));
        }
        j["walls"] = std::move(arr);
        j["vanishing"] = std::move(van);
        print_json(j);
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const Wall& w : walls)
        rows.push_back({std::to_string(w.d), w.e.str(), yes_no(is_vanishing_wall(w, c))});
    if (format == "csv")
        print_csv({"d", "e", "vanishing"}, rows);
    else
        print_aligned({"d", "e", "vanishing"}, rows);
}

// -------------------------------------------------------------- chamber ----
void run_chamber(const CurveOpts& o, const std::string& weights, i64 perturb,
                 const std::string& format) {
    Curve c = make_curve(o.genus, o.points);
    WeightVector w = weights_from(c, weights, perturb);
    std::vector<Wall> walls = enumerate_walls(c);
    ChamberID id = chamber_of(w, walls);
    std::optional<bool> null_ch;
    if (c.genus == 0 && c.points >= 3) null_ch = is_null_chamber(w);

    if (format == "json") {
        njson j{{"genus", c.genus}, {"points", c.points}, {"weights", weights_json(w)},
                {"key", id.key()}};
        njson signs = njson::array(), arr = njson::array();
        for (std::size_t i = 0; i < walls.size(); ++i) {
            signs.push_back(static_cast<int>(id.signs[i]));
            arr.push_back(wall_json(walls[i]));
        }
        j["signs"] = std::move(signs);
        j["walls"] = std::move(arr);
        j["null_chamber"] = null_ch ? njson(*null_ch) : njson(nullptr);
        print_json(j);
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < walls.size(); ++i)
        rows.push_back({std::to_string(walls[i].d), walls[i].e.str(),
                        id.signs[i] > 0 ? "+" : "-"});
    if (format == "csv") {
        print_csv({"d", "e", "sign"}, rows);
        return;
    }
    std::cout << "chamber: " << id.key() << "\n";
    if (null_ch) std::cout << "null_chamber: " << yes_no(*null_ch) << "\n";
    print_aligned({"d", "e", "sign"}, rows);
}

// ------------------------------------------------------------ crossings ----
void run_crossings(const CurveOpts& o, const std::string& from, const std::string& to,
                   i64 perturb, const std::string& format) {
    Curve c = make_curve(o.genus, o.points);
    std::vector<Crossing> cs =
        segment_crossings(weights_from(c, from, perturb), weights_from(c, to, perturb));
    if (format == "json") {
        njson arr = njson::array();
        for (const Crossing& x : cs)
            arr.push_back(njson{{"param", rat_string(x.param)},
                                {"d", x.wall.d},
                                {"e", evec_json(x.wall.e)},
                                {"from", x.from_sign},
                                {"to", x.to_sign}});
        print_json(njson{{"genus", c.genus}, {"points", c.points},
                         {"count", static_cast<i64>(cs.size())},
                         {"crossings", std::move(arr)}});
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const Crossing& x : cs)
        rows.push_back({rat_string(x.param), std::to_string(x.wall.d), x.wall.e.str(),
                        std::to_string(x.from_sign), std::to_string(x.to_sign)});
    if (format == "csv")
        print_csv({"param", "d", "e", "from", "to"}, rows);
    else
        print_aligned({"param", "d", "e", "from", "to"}, rows);
}

// --------------------------------------------------------------- strata ----
void run_strata(const CurveOpts& o, const std::string& weights, i64 perturb,
                const std::string& format) {
    Curve c = make_curve(o.genus, o.points);
    WeightVector w = weights_from(c, weights, perturb);
    std::vector<Stratum> strata = enumerate_strata(w);
    IntPoly wss = weighted_stratum_sum(w);
    if (format == "json") {
        njson arr = njson::array();
        for (const Stratum& s : strata)
            arr.push_back(njson{{"d", s.d},
                                {"e", evec_json(s.e)},
                                {"lambda", s.lambda},
                                {"h", s.h},
                                {"critical", rat_string(s.critical_value)},
                                {"poincare", poly_json(stratum_poincare(s, c))}});
        print_json(njson{{"genus", c.genus}, {"points", c.points},
                         {"weights", weights_json(w)},
                         {"count", static_cast<i64>(strata.size())},
                         {"strata", std::move(arr)},
                         {"weighted_sum", poly_json(wss)}});
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const Stratum& s : strata)
        rows.push_back({std::to_string(s.d), s.e.str(), std::to_string(s.lambda),
                        std::to_string(s.h), rat_string(s.critical_value),
                        stratum_poincare(s, c).str()});
    if (format == "csv") {
        print_csv({"d", "e", "lambda", "h", "critical", "poincare"}, rows);
        return;
    }
    print_aligned({"d", "e", "lambda", "h", "critical", "poincare"}, rows);
    std::cout << "weighted sum: " << wss.str() << "\n";
}

// ------------------------------------------------------------- poincare ----
void run_poincare(const CurveOpts& o, const std::string& weights, i64 perturb,
                  const std::string& format) {
    Curve c = make_curve(o.genus, o.points);
    IntPoly higgs = higgs_poincare_closed(c); // cross-checked against the stratification
    BigInt euler = higgs.eval(BigInt(-1));
    std::optional<WeightVector> w;
    std::optional<IntPoly> bundles;
    std::string key;
    if (!weights.empty()) {
        w = weights_from(c, weights, perturb);
        key = chamber_of(*w).key();
        bundles = parabolic_poincare(*w);
    }
    if (format == "json") {
        njson j{{"genus", c.genus}, {"points", c.points}, {"higgs", poly_json(higgs)},
                {"euler", euler.str()}};
        if (w)
            j["chamber"] = njson{{"weights", weights_json(*w)},
                                 {"key", key},
                                 {"bundles", poly_json(*bundles)}};
        print_json(j);
        return;
    }
    std::vector<std::pair<std::string, std::string>> fields = {
        {"higgs", higgs.str()}, {"euler", euler.str()}};
    if (w) {
        fields.emplace_back("chamber", key);
        fields.emplace_back("bundles", bundles->str());
    }
    print_fields(format, fields);
}

// ---------------------------------------------------------------- euler ----
void run_euler(const CurveOpts& o, const std::string& format) {
    Curve c = make_curve(o.genus, o.points);
    BigInt e = euler_characteristic(c);
    if (format == "json")
        print_json(njson{{"genus", c.genus}, {"points", c.points}, {"euler", e.str()}});
    else if (format == "csv")
        print_csv({"euler"}, {{e.str()}});
    else
        std::cout << e.str() << "\n";
}

// ------------------------------------------------------------- nonempty ----
void run_nonempty(const CurveOpts& o, const std::string& weights, i64 grid, int threads,
                  i64 perturb, const std::string& format) {
    Curve c = make_curve(o.genus, o.points);
    if (weights.empty() == (grid == 0))
        throw UsageError("bad_arguments", "pass exactly one of --weights or --grid");
    if (!weights.empty()) {
        WeightVector w = weights_from(c, weights, perturb);
        std::string key = chamber_of(w).key();
        IntPoly bp = parabolic_poincare(w);
        bool bundles_nonempty = !bp.is_zero();
        bool higgs_nonempty = !higgs_poincare_morse(c).is_zero();
        std::optional<bool> fusion;
        if (c.genus == 0 && c.points == 3) fusion = fusion_nonempty(w);
        std::optional<Stratum> min_stratum;
        if (c.genus == 0) min_stratum = minimum_stratum(w);
        if (format == "json") {
            njson j{{"genus", c.genus}, {"points", c.points},
                    {"weights", weights_json(w)}, {"key", key},
                    {"bundles_nonempty", bundles_nonempty},
                    {"bundle_poincare", poly_json(bp)},
                    {"higgs_nonempty", higgs_nonempty}};
            j["fusion"] = fusion ? njson(*fusion) : njson(nullptr);
            j["index_zero_stratum"] =
                min_stratum ? njson{{"d", min_stratum->d}, {"e", evec_json(min_stratum->e)}}
                            : njson(nullptr);
            print_json(j);
            return;
        }
        std::vector<std::pair<std::string, std::string>> fields = {
            {"chamber", key},
            {"bundles_nonempty", yes_no(bundles_nonempty)},
            {"bundle_poincare", bp.str()},
            {"higgs_nonempty", yes_no(higgs_nonempty)}};
        if (fusion) fields.emplace_back("fusion", yes_no(*fusion));
        if (c.genus == 0)
            fields.emplace_back("index_zero_stratum",
                                min_stratum ? Wall{min_stratum->d, min_stratum->e}.str()
                                            : std::string("none"));
        print_fields(format, fields);
        return;
    }
    auto chambers = enumerate_chambers(c, grid, resolve_threads(threads), 1);
    if (format == "json") {
        njson arr = njson::array();
        for (const ChamberSample& ch : chambers) {
            IntPoly bp = parabolic_poincare(ch.samples.at(0));
            arr.push_back(njson{{"key", ch.id.key()},
                                {"grid_points", ch.grid_points},
                                {"bundles_nonempty", !bp.is_zero()},
                                {"bundle_poincare", poly_json(bp)}});
        }
        print_json(njson{{"genus", c.genus}, {"points", c.points}, {"grid", grid},
                         {"denominator", 2 * grid + 1},
                         {"count", static_cast<i64>(chambers.size())},
                         {"chambers", std::move(arr)}});
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const ChamberSample& ch : chambers) {
        IntPoly bp = parabolic_poincare(ch.samples.at(0));
        rows.push_back({ch.id.key(), std::to_string(ch.grid_points),
                        yes_no(!bp.is_zero()), bp.str()});
    }
    if (format == "csv")
        print_csv({"key", "grid_points", "bundles_nonempty", "bundle_poincare"}, rows);
    else
        print_aligned({"key", "grid_points", "bundles_nonempty", "bundle_poincare"}, rows);
}

// ------------------------------------------------------------ stabilize ----
void run_stabilize(const CurveOpts& o, const std::string& weights, i64 deg_sub,
                   const std::string& pattern, int xi, const std::string& sub_eq,
                   const std::string& kind, bool semistable, i64 perturb,
                   const std::string& format) {
    Curve c = make_curve(o.genus, o.points);
    WeightVector w = weights_from(c, weights, perturb); // walls allowed here
    EVector e = parse_evector(c, pattern);
    std::optional<bool> seq;
    if (sub_eq == "yes") seq = true;
    if (sub_eq == "no") seq = false;
    SplitData d = make_split_data(std::move(w), deg_sub, std::move(e), xi == 0, seq);

    std::vector<std::pair<std::string, Decision>> decisions;
    if (kind == "pair" || kind == "both")
        decisions.emplace_back("pair", semistable ? exists_semistable_pair(d)
                                                  : exists_stable_pair(d));
    if (kind == "higgs" || kind == "both")
        decisions.emplace_back("higgs", semistable ? exists_semistable_higgs(d)
                                                   : exists_stable_higgs(d));

    if (format == "json") {
        njson j{{"genus", c.genus},      {"points", c.points},
                {"weights", weights_json(d.weights)}, {"deg_sub", d.deg_sub},
                {"quot_degree", quot_degree(d)},      {"e", evec_json(d.e)},
                {"xi_zero", d.xi_zero},
                {"sub_eq_quot", sub_eq},
                {"semistable_question", semistable},
                {"sub_pardeg", rat_string(sub_pardeg(d))},
                {"colength", colength(d)}};
        njson dec = njson::object();
        for (const auto& [k, v] : decisions)
            dec[k] = njson{{"answer", v.str()}, {"reason", v.reason}};
        j["decisions"] = std::move(dec);
        print_json(j);
        return;
    }
    if (format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& [k, v] : decisions) rows.push_back({k, v.str(), v.reason});
        print_csv({"kind", "answer", "reason"}, rows);
        return;
    }
    std::cout << "sub_pardeg: " << rat_string(sub_pardeg(d)) << "\n";
    std::cout << "colength: " << colength(d) << "\n";
    for (const auto& [k, v] : decisions)
        std::cout << k << ": " << v.str() << "  (" << v.reason << ")\n";
}

// --------------------------------------------------------------- p1demo ----
void run_p1demo(const CurveOpts& o, const std::string& weights, i64 perturb,
                const std::string& format) {
    Curve c = make_curve(o.genus, o.points);
    WeightVector w = weights_from(c, weights, perturb);
    P1Classification cls = p1_three_classify(w);
    std::string region;
    switch (cls.region) {
    case P1Classification::Region::FusionChamber: region = "fusion_chamber"; break;
    case P1Classification::Region::TopChamber: region = "top_chamber"; break;
    case P1Classification::Region::OnWall: region = "wall"; break;
    }
    if (format == "json") {
        njson j{{"weights", weights_json(w)}, {"region", region}, {"label", cls.label}};
        j["e"] = cls.e ? evec_json(*cls.e) : njson(nullptr);
        j["wall"] = cls.wall ? wall_json(*cls.wall) : njson(nullptr);
        j["destab_degree"] = cls.destab_degree ? njson(*cls.destab_degree) : njson(nullptr);
        j["bundle_points"] = cls.bundle_points;
        j["bundle_iso_classes"] = cls.bundle_iso_classes;
        j["pair_points"] = cls.pair_points;
        j["pair_iso_classes"] = cls.pair_iso_classes;
        j["bundle_desc"] = cls.bundle_desc;
        j["pair_desc"] = cls.pair_desc;
        j["pair_space_desc"] = cls.pair_space_desc;
        print_json(j);
        return;
    }
    std::vector<std::pair<std::string, std::string>> fields = {
        {"label", cls.label},
        {"region", region},
    };
    if (cls.e) fields.emplace_back("e", cls.e->str());
    if (cls.wall) fields.emplace_back("wall", cls.wall->str());
    if (cls.destab_degree)
        fields.emplace_back("destab_degree", std::to_string(*cls.destab_degree));
    fields.emplace_back("bundle_points", std::to_string(cls.bundle_points));
    fields.emplace_back("bundle_iso_classes", std::to_string(cls.bundle_iso_classes));
    fields.emplace_back("pair_points", std::to_string(cls.pair_points));
    fields.emplace_back("pair_iso_classes", std::to_string(cls.pair_iso_classes));
    fields.emplace_back("bundles", cls.bundle_desc);
    fields.emplace_back("pairs", cls.pair_desc);
    fields.emplace_back("pair_space", cls.pair_space_desc);
    print_fields(format, fields);
}

// ---------------------------------------------------------------- check ----
void run_check(const std::string& suite, int criterion, int threads, bool timings,
               const std::string& format, int& rc) {
    std::vector<CheckResult> results;
    if (criterion > 0)
        results.push_back(run_criterion(criterion, resolve_threads(threads)));
    else
        results = run_suite(suite, resolve_threads(threads));
    bool all = true;
    for (const CheckResult& r : results) all = all && r.passed;
    rc = all ? 0 : 4;

    auto fmt_seconds = [](double s) {
        std::ostringstream os;
        os.setf(std::ios::fixed);
        os.precision(2);
        os << s;
        return os.str();
    };
    if (format == "json") {
        njson arr = njson::array();
        for (const CheckResult& r : results) {
            njson row{{"criterion", r.criterion}, {"name", r.name},
                      {"passed", r.passed}, {"detail", r.detail}};
            if (timings) row["seconds"] = fmt_seconds(r.seconds);
            arr.push_back(std::move(row));
        }
        print_json(njson{{"suite", criterion > 0 ? std::string("criterion") : suite},
                         {"results", std::move(arr)}, {"passed", all}});
        return;
    }
    if (format == "csv") {
        std::vector<std::string> header = {"criterion", "name", "passed", "detail"};
        if (timings) header.push_back("seconds");
        std::vector<std::vector<std::string>> rows;
        for (const CheckResult& r : results) {
            std::vector<std::string> row = {std::to_string(r.criterion), r.name,
                                            yes_no(r.passed), r.detail};
            if (timings) row.push_back(fmt_seconds(r.seconds));
            rows.push_back(std::move(row));
        }
        print_csv(header, rows);
        return;
    }
    for (const CheckResult& r : results) {
        std::cout << "criterion " << r.criterion << " (" << r.name << "): "
                  << (r.passed ? "PASS" : "FAIL");
        if (timings) std::cout << " [" << fmt_seconds(r.seconds) << "s]";
        std::cout << " -- " << r.detail << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chamber, stratum, and Betti-number calculator for moduli of "
                 "rank-2 parabolic Higgs bundles and K(D) pairs"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read default options from an INI file");
    app.set_version_flag("--version", "parhiggs 1.0.0");
    std::string format = "table";
    app.add_option("--format", format, "output format: table, json, or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();

    int rc = 0;

    auto add_curve = [](CLI::App* s, CurveOpts& o, bool required = true) {
        auto* g = s->add_option("-g,--genus", o.genus, "curve genus (>= 0)");
        auto* n = s->add_option("-n,--points", o.points, "number of marked points (>= 1)");
        if (required) {
            g->required();
            n->required();
        } else {
            g->capture_default_str();
            n->capture_default_str();
        }
        s->fallthrough();
    };

    // walls
    auto w_opts = CurveOpts{};
    auto* walls = app.add_subcommand("walls", "list the canonical walls of the weight cube");
    add_curve(walls, w_opts);
    walls->callback([&] { run_walls(w_opts, format); });

    // chamber
    auto ch_opts = CurveOpts{};
    std::string ch_weights;
    i64 ch_perturb = 0;
    auto* chamber = app.add_subcommand("chamber", "identify the chamber of a weight vector");
    add_curve(chamber, ch_opts);
    chamber->add_option("-w,--weights", ch_weights, "comma separated rationals, e.g. 1/3,1/9,1/27")
        ->required();
    chamber->add_option("--perturb", ch_perturb,
                        "shift alpha_i by prime(i)*SCALE/10^6 before evaluating");
    chamber->callback([&] { run_chamber(ch_opts, ch_weights, ch_perturb, format); });

    // crossings
    auto cr_opts = CurveOpts{};
    std::string cr_from, cr_to;
    i64 cr_perturb = 0;
    auto* crossings =
        app.add_subcommand("crossings", "walls crossed by a straight weight segment");
    add_curve(crossings, cr_opts);
    crossings->add_option("--from", cr_from, "segment start weights")->required();
    crossings->add_option("--to", cr_to, "segment end weights")->required();
    crossings->add_option("--perturb", cr_perturb,
                          "shift both endpoints by prime(i)*SCALE/10^6");
    crossings->callback([&] { run_crossings(cr_opts, cr_from, cr_to, cr_perturb, format); });

    // strata
    auto st_opts = CurveOpts{};
    std::string st_weights;
    i64 st_perturb = 0;
    auto* strata = app.add_subcommand(
        "strata", "critical strata of the Higgs moduli above the minimum");
    add_curve(strata, st_opts);
    strata->add_option("-w,--weights", st_weights, "comma separated rationals")->required();
    strata->add_option("--perturb", st_perturb,
                       "shift alpha_i by prime(i)*SCALE/10^6 before evaluating");
    strata->callback([&] { run_strata(st_opts, st_weights, st_perturb, format); });

    // poincare
    auto po_opts = CurveOpts{};
    std::string po_weights;
    i64 po_perturb = 0;
    auto* poincare = app.add_subcommand(
        "poincare", "Poincare polynomials: Higgs moduli, and the bundle moduli of a chamber");
    add_curve(poincare, po_opts);
    poincare->add_option("-w,--weights", po_weights,
                         "optional weights: also report that chamber's bundle moduli");
    poincare->add_option("--perturb", po_perturb,
                         "shift alpha_i by prime(i)*SCALE/10^6 before evaluating");
    poincare->callback([&] { run_poincare(po_opts, po_weights, po_perturb, format); });

    // euler
    auto eu_opts = CurveOpts{};
    auto* euler = app.add_subcommand(
        "euler", "Euler characteristic of the fixed-determinant Higgs moduli");
    add_curve(euler, eu_opts);
    euler->callback([&] { run_euler(eu_opts, format); });

    // nonempty
    auto ne_opts = CurveOpts{};
    std::string ne_weights;
    i64 ne_grid = 0;
    int ne_threads = 0;
    i64 ne_perturb = 0;
    auto* nonempty = app.add_subcommand(
        "nonempty", "emptiness report for one chamber (--weights) or a full grid scan (--grid)");
    add_curve(nonempty, ne_opts);
    nonempty->add_option("-w,--weights", ne_weights, "weights of the chamber to probe");
    nonempty->add_option("-K,--grid", ne_grid,
                         "scan the grid alpha_i = k/(2K+1), k = 1..K (K >= 2)")
        ->check(CLI::Range(static_cast<i64>(2), static_cast<i64>(64)));
    nonempty->add_option("-t,--threads", ne_threads,
                         "worker threads for the grid scan (0 = auto); output independent");
    nonempty->add_option("--perturb", ne_perturb,
                         "shift alpha_i by prime(i)*SCALE/10^6 before evaluating");
    nonempty->callback(
        [&] { run_nonempty(ne_opts, ne_weights, ne_grid, ne_threads, ne_perturb, format); });

    // stabilize
    auto sb_opts = CurveOpts{};
    std::string sb_weights, sb_pattern, sb_subeq = "auto", sb_kind = "both";
    i64 sb_deg = 0, sb_perturb = 0;
    int sb_xi = 0;
    bool sb_semi = false;
    auto* stabilize = app.add_subcommand(
        "stabilize", "decide existence of stable pairs / Higgs bundles over split data");
    add_curve(stabilize, sb_opts);
    stabilize->add_option("-w,--weights", sb_weights, "weights (walls allowed here)")
        ->required();
    stabilize->add_option("--deg-sub", sb_deg, "degree of the parabolic sub-line")
        ->required();
    stabilize
        ->add_option("-e,--pattern", sb_pattern,
                     "flag intersection pattern of the sub-line, e.g. 0,1,1")
        ->required();
    stabilize->add_option("--xi", sb_xi, "extension class: 0 = split, 1 = nonzero")
        ->check(CLI::Range(0, 1))
        ->capture_default_str();
    stabilize
        ->add_option("--sub-eq-quot", sb_subeq,
                     "are sub and quotient isomorphic parabolic lines: auto, yes, no")
        ->check(CLI::IsMember({"auto", "yes", "no"}))
        ->capture_default_str();
    stabilize->add_option("--kind", sb_kind, "which decision: pair, higgs, both")
        ->check(CLI::IsMember({"pair", "higgs", "both"}))
        ->capture_default_str();
    stabilize->add_flag("--semistable", sb_semi, "ask the semistable question instead");
    stabilize->add_option("--perturb", sb_perturb,
                          "shift alpha_i by prime(i)*SCALE/10^6 before evaluating");
    stabilize->callback([&] {
        run_stabilize(sb_opts, sb_weights, sb_deg, sb_pattern, sb_xi, sb_subeq, sb_kind,
                      sb_semi, sb_perturb, format);
    });

    // p1demo
    auto p1_opts = CurveOpts{}; // defaults: genus 0, 3 points
    std::string p1_weights;
    i64 p1_perturb = 0;
    auto* p1demo = app.add_subcommand(
        "p1demo", "complete three-point classification at genus 0 (walls included)");
    add_curve(p1demo, p1_opts, /*required=*/false);
    p1demo->add_option("-w,--weights", p1_weights, "three weights, e.g. 1/3,1/3,1/3")
        ->required();
    p1demo->add_option("--perturb", p1_perturb,
                       "shift alpha_i by prime(i)*SCALE/10^6 before evaluating");
    p1demo->callback([&] { run_p1demo(p1_opts, p1_weights, p1_perturb, format); });

    // check
    std::string ck_suite = "all";
    int ck_criterion = 0, ck_threads = 0;
    bool ck_timings = false;
    auto* check = app.add_subcommand("check", "run the built-in verification battery");
    check->fallthrough();
    check->add_option("--suite", ck_suite, "euler, wallcross, consistency, or all")
        ->check(CLI::IsMember({"euler", "wallcross", "consistency", "all"}))
        ->capture_default_str();
    check->add_option("--criterion", ck_criterion, "run a single criterion 1..9")
        ->check(CLI::Range(1, 9));
    check->add_option("-t,--threads", ck_threads,
                      "worker threads (0 = auto); output independent");
    check->add_flag("--timings", ck_timings, "include wall-clock seconds in the output");
    check->callback(
        [&] { run_check(ck_suite, ck_criterion, ck_threads, ck_timings, format, rc); });

    auto error_json = [](const std::string& code, const std::string& message) {
        std::cerr << njson{{"error", code}, {"message", message}}.dump() << "\n";
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e); // --help / --version
    } catch (const CLI::ParseError& e) {
        error_json("bad_arguments", e.what());
        return 2;
    } catch (const UsageError& e) {
        error_json(e.code(), e.what());
        return 2;
    } catch (const NonGenericError& e) {
        error_json(e.code(), e.what());
        return 3;
    } catch (const ConsistencyError& e) {
        error_json(e.code(), e.what());
        return 4;
    } catch (const std::exception& e) {
        error_json("internal_error", e.what());
        return 4;
    }
    return rc;
}
