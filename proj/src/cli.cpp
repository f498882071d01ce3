#include "qplane/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qplane/enumeration.hpp"
#include "qplane/errors.hpp"
#include "qplane/oracle.hpp"
#include "qplane/reduction.hpp"
#include "qplane/serialize.hpp"
#include "qplane/torsion.hpp"

namespace qplane::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        parts.push_back(trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos)
            return parts;
        start = comma + 1;
    }
}

struct Common {
    std::string format = "json";
    std::string out_path;
    unsigned threads = 0;
    bool timing = false;
};

void add_common(CLI::App* sub, Common& c, bool formats) {
    if (formats)
        sub->add_option("--format", c.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--out", c.out_path, "write to this file instead of stdout");
    sub->add_option("--threads", c.threads, "worker threads, 0 = all cores");
    sub->add_flag("--timing", c.timing, "add wall-clock milliseconds to the document");
}

// What a subcommand produced: plain text (csv, table) or a JSON document,
// optionally preceded by JSON lines.
struct Output {
    std::string plain;
    std::vector<Json> lines;
    Json doc;
    bool pretty = true;
    int code = 0;
};

Output plain_output(std::string text) {
    Output o;
    o.plain = std::move(text);
    return o;
}

Json document(const std::string& name, Json args, Json result) {
    Json doc = Json::object();
    doc["schema_version"] = kSchemaVersion;
    Json command = Json::object();
    command["name"] = name;
    command["args"] = std::move(args);
    doc["command"] = std::move(command);
    doc["result"] = std::move(result);
    return doc;
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f)
        throw InvalidInput("cannot open " + c.out_path + " for writing");
    f << text;
}

std::string joined(std::span<const Degree> v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string joined(const std::vector<BigInt>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + v[i].str();
    return s;
}

// Left-aligned columns separated by two spaces.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i)
                width.push_back(0);
            width[i] = std::max(width[i], row[i].size());
        }
    std::string s;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size())
                line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        s += line + "\n";
    }
    return s;
}

Json encode(const SearchStats& st) {
    Json j = Json::object();
    j["nodes"] = st.nodes;
    j["candidates"] = st.candidates;
    j["duplicates"] = st.duplicates;
    j["max_depth"] = st.max_depth;
    j["seeds"] = st.seeds;
    return j;
}

Json encode_optional(const std::optional<BigInt>& v) { return v ? qplane::encode(*v) : Json(nullptr); }

Json encode_notes(const std::vector<std::string>& notes) {
    Json j = Json::array();
    for (const auto& n : notes)
        j.push_back(n);
    return j;
}

// quot

struct QuotArgs {
    Common common;
    std::int64_t l = 1;
    std::string p1;
    bool no_hf = false;
    bool no_rank = false;
    std::uint64_t max_nodes = 0;
};

// One row per answer. M = 0 is the single answer with empty a and b and
// h_N = l h_R, which agrees with P1 from t = 0.
struct QuotRow {
    std::vector<Degree> a, b;
    std::vector<BigInt> hN;
    Degree stable_from = 0;
};

std::vector<QuotRow> quot_rows(const EnumerationResult& res) {
    std::vector<QuotRow> rows;
    if (res.zero_kernel)
        rows.push_back({{}, {}, {BigInt(res.query.l)}, 0});
    for (const QuotTable& t : res.tables)
        rows.push_back({{t.betti.a().begin(), t.betti.a().end()},
                        {t.betti.b().begin(), t.betti.b().end()},
                        t.hN,
                        t.stable_from});
    return rows;
}

Output run_quot(const QuotArgs& qa) {
    QuotQuery q{qa.l, parse_poly(qa.p1)};
    QuotOptions opt;
    opt.hf_filter = !qa.no_hf;
    opt.rank_filter = !qa.no_rank;
    opt.search.threads = qa.common.threads;
    opt.search.max_nodes = qa.max_nodes;
    EnumerationResult res = enumerate_quot(q, opt);
    const std::vector<QuotRow> rows = quot_rows(res);

    if (qa.common.format == "csv") {
        std::string s = "index,a,b,hN,stable_from\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const QuotRow& r = rows[i];
            s += std::to_string(i + 1) + "," + joined(r.a, " ") + "," + joined(r.b, " ") + "," + joined(r.hN, " ") +
                 "," + std::to_string(r.stable_from) + "\n";
        }
        return plain_output(std::move(s));
    }
    if (qa.common.format == "table") {
        std::string s = "quot l=" + std::to_string(q.l) + " P1=" + q.p1.to_string() + "\n";
        s += "kernel P_M = " + res.kernel_poly.to_string() + "\n";
        s += "tables: " + std::to_string(rows.size()) + "\n";
        for (const auto& n : res.notes)
            s += "note: " + n + "\n";
        std::vector<std::vector<std::string>> cells{{"#", "a", "b", "hN(t=0..)", "stable_from"}};
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const QuotRow& r = rows[i];
            cells.push_back({std::to_string(i + 1), joined(r.a, ","), joined(r.b, ","), joined(r.hN, " "),
                             std::to_string(r.stable_from)});
        }
        return plain_output(s + "\n" + render_table(cells));
    }

    Json query = Json::object();
    query["l"] = q.l;
    query["p1"] = qplane::encode(q.p1);
    Json tables = Json::array();
    for (const QuotRow& r : rows) {
        Json tj = Json::object();
        tj["a"] = qplane::encode_sequence(r.a);
        tj["b"] = qplane::encode_sequence(r.b);
        Json hn = Json::object();
        Json values = Json::array();
        for (const BigInt& v : r.hN)
            values.push_back(qplane::encode(v));
        hn["values"] = std::move(values);
        hn["stable_from"] = r.stable_from;
        tj["hN"] = std::move(hn);
        tables.push_back(std::move(tj));
    }
    Json result = Json::object();
    result["query"] = std::move(query);
    result["kernel_polynomial"] = qplane::encode(res.kernel_poly);
    result["p_values"] = qplane::encode(res.p);
    result["zero_kernel"] = res.zero_kernel;
    result["budget"] = encode_optional(res.budget);
    result["complete"] = res.complete;
    result["count"] = rows.size();
    result["tables"] = std::move(tables);
    result["admissible_count"] = res.admissible_count;
    result["rejected_by_hf"] = res.rejected_by_hf;
    result["notes"] = encode_notes(res.notes);
    result["stats"] = encode(res.stats);

    Json args = Json::object();
    args["l"] = q.l;
    args["p1"] = qplane::encode(q.p1);
    args["hf_filter"] = opt.hf_filter;
    args["rank_filter"] = opt.rank_filter;
    args["max_nodes"] = qa.max_nodes;
    Output o;
    o.doc = document("quot", std::move(args), std::move(result));
    return o;
}

// torsion

struct TorsionArgs {
    Common common;
    std::int64_t e = 1;
    std::int64_t d = 0;
};

Output run_torsion(const TorsionArgs& ta) {
    TorsionQuery q{ta.e, ta.d};
    TorsionSearch res = enumerate_torsion(q, TorsionOptions{ta.common.threads});
    const HilbPoly target = HilbPoly::linear(Rat(q.e), Rat(q.d));

    if (ta.common.format == "csv") {
        std::string s = "index,a,b,slope_constant\n";
        for (std::size_t i = 0; i < res.resolutions.size(); ++i) {
            const auto& r = res.resolutions[i];
            s += std::to_string(i + 1) + "," + joined(r.a(), " ") + "," + joined(r.b(), " ") + "," +
                 slope_constant(r).to_string() + "\n";
        }
        return plain_output(std::move(s));
    }
    if (ta.common.format == "table") {
        std::string s = "torsion e=" + std::to_string(q.e) + " d=" + std::to_string(q.d) + " P=" +
                        target.to_string() + "\n";
        s += "numerical candidates: " + std::to_string(res.resolutions.size()) + "\n";
        std::vector<std::vector<std::string>> rows{{"#", "a", "b", "slope_constant"}};
        for (std::size_t i = 0; i < res.resolutions.size(); ++i) {
            const auto& r = res.resolutions[i];
            rows.push_back(
                {std::to_string(i + 1), joined(r.a(), ","), joined(r.b(), ","), slope_constant(r).to_string()});
        }
        return plain_output(s + "\n" + render_table(rows));
    }

    Json query = Json::object();
    query["e"] = q.e;
    query["d"] = q.d;
    Json tables = Json::array();
    for (const auto& r : res.resolutions) {
        Json tj = qplane::encode(r);
        tj["slope_constant"] = qplane::encode(slope_constant(r));
        tables.push_back(std::move(tj));
    }
    Json stats = Json::object();
    stats["a1_min"] = res.a1_min;
    stats["a1_max"] = res.a1_max;
    stats["strata"] = res.strata;
    stats["leaves"] = res.leaves;
    Json result = Json::object();
    result["query"] = std::move(query);
    result["polynomial"] = qplane::encode(target);
    result["label"] = "numerical-candidate";
    result["count"] = res.resolutions.size();
    result["tables"] = std::move(tables);
    result["stats"] = std::move(stats);

    Json args = Json::object();
    args["e"] = q.e;
    args["d"] = q.d;
    Output o;
    o.doc = document("torsion", std::move(args), std::move(result));
    return o;
}

// reduce

struct ReduceArgs {
    Common common;
    std::string a;
    std::string b;
    bool trace = false;
    bool verify = false;
};

Json encode_step(const ReductionStep& st) {
    Json j = Json::object();
    j["chosen_s"] = st.chosen_s;
    j["decremented_value"] = st.decremented_value;
    j["pre_b1"] = st.pre_b1;
    j["deletion"] = st.deletion_occurred;
    j["p0_delta"] = qplane::encode(st.p0_delta);
    return j;
}

Output run_reduce(const ReduceArgs& ra) {
    Output o;
    o.pretty = false;
    BettiPair s(parse_sequence(ra.a), parse_sequence(ra.b));
    ReductionTrace trace = run_reduction(s);

    if (ra.trace) {
        for (std::size_t i = 0; i < trace.states.size(); ++i) {
            Json line = Json::object();
            line["kind"] = "state";
            line["index"] = i;
            Json st = qplane::encode(trace.states[i]);
            line["a"] = std::move(st["a"]);
            line["b"] = std::move(st["b"]);
            line["p_values"] = qplane::encode(p_values(trace.states[i]));
            if (i > 0)
                line["step"] = encode_step(trace.steps[i - 1]);
            o.lines.push_back(std::move(line));
        }
    }

    Json result = Json::object();
    result["initial"] = qplane::encode(trace.initial());
    result["terminal"] = qplane::encode(trace.terminal());
    result["steps"] = trace.steps.size();
    result["p_values"] = qplane::encode(p_values(trace.initial()));
    const PValues p = p_values(s);
    result["budget"] = encode_optional(iteration_budget(p.p2, p.p1, p.p0).steps);
    if (ra.verify) {
        TraceReport rep = verify_T_invariants(trace);
        Json v = Json::object();
        v["ok"] = rep.ok();
        v["steps_checked"] = rep.steps_checked;
        Json issues = Json::array();
        for (const auto& is : rep.issues) {
            Json ij = Json::object();
            ij["step"] = is.step;
            ij["invariant"] = is.invariant;
            ij["detail"] = is.detail;
            issues.push_back(std::move(ij));
        }
        v["issues"] = std::move(issues);
        result["verify"] = std::move(v);
        o.code = rep.ok() ? 0 : 2;
    }

    Json args = Json::object();
    args["a"] = qplane::encode_sequence(s.a());
    args["b"] = qplane::encode_sequence(s.b());
    args["trace"] = ra.trace;
    args["verify"] = ra.verify;
    Json doc = document("reduce", std::move(args), std::move(result));
    o.doc = Json::object();
    o.doc["kind"] = "result";
    for (auto& [k, v] : doc.items())
        o.doc[k] = std::move(v);
    return o;
}

// check

struct CheckArgs {
    Common common;
    std::string a;
    std::string b;
};

Output run_check(const CheckArgs& ca) {
    BettiPair s(parse_sequence(ca.a), parse_sequence(ca.b));
    AdmissibilityVerdict v = check_admissible(s);
    Json violations = Json::array();
    for (const Violation& x : v.violations) {
        Json j = Json::object();
        j["r"] = x.r;
        j["condition"] = x.condition == Condition::SOverR ? "(*1)" : "(*2)";
        j["s"] = x.s;
        j["lhs"] = qplane::encode(x.lhs);
        j["rhs"] = qplane::encode(x.rhs);
        j["message"] = x.to_string();
        violations.push_back(std::move(j));
    }
    Json result = Json::object();
    result["betti"] = qplane::encode(s);
    result["admissible"] = v.admissible();
    result["p_values"] = qplane::encode(p_values(s));
    result["violations"] = std::move(violations);
    Json args = Json::object();
    args["a"] = qplane::encode_sequence(s.a());
    args["b"] = qplane::encode_sequence(s.b());
    Output o;
    o.doc = document("check", std::move(args), std::move(result));
    return o;
}

// verify

struct VerifyArgs {
    Common common;
    std::string mode;
    std::optional<std::int64_t> l;
    std::string p1;
    std::string p;
    std::int64_t e = 1;
    std::int64_t d = 0;
    Degree max_value = 6;
    std::size_t max_len = 6;
    std::optional<std::size_t> max_b_len;
    std::optional<Degree> a_min;
    std::optional<Degree> a_max;
    std::uint64_t max_nodes = 0;
};

Json encode_report(const CrossCheckReport& rep) {
    Json j = Json::object();
    j["status"] = to_string(rep.status);
    j["summary"] = rep.summary();
    j["main_count"] = rep.main_count;
    j["main_in_box"] = rep.main_in_box;
    j["oracle_count"] = rep.oracle_count;
    j["oracle_subset_of_main"] = rep.oracle_subset_of_main();
    j["main_in_box_equals_oracle"] = rep.main_in_box_equals_oracle();
    j["touches_boundary"] = rep.touches_boundary();
    j["missing"] = rep.missing;
    j["extra"] = rep.extra;
    j["boundary"] = rep.boundary;
    return j;
}

Output run_verify(const VerifyArgs& va) {
    SearchBox box;
    box.max_value = va.max_value;
    box.max_a_len = va.max_len;
    box.max_b_len = va.max_b_len.value_or(va.max_len);
    Json args = Json::object();
    args["mode"] = va.mode;
    CrossCheckReport rep;
    Json extra = Json::object();

    if (va.mode == "quot") {
        PValues target;
        if (!va.p.empty()) {
            if (va.l || !va.p1.empty())
                throw InvalidInput("give either --p or --l with --p1, not both");
            target = parse_pvalues(va.p);
        } else {
            if (!va.l || va.p1.empty())
                throw InvalidInput("quot mode needs --p, or --l with --p1");
            if (*va.l < 1)
                throw InvalidInput("l must be >= 1");
            HilbPoly p1 = parse_poly(va.p1);
            target = PValues::of(binom2(0) * Rat(*va.l) - p1);
            args["l"] = *va.l;
            args["p1"] = qplane::encode(p1);
        }
        args["p_values"] = qplane::encode(target);
        SearchOptions opt;
        opt.threads = va.common.threads;
        opt.max_nodes = va.max_nodes;
        AdmissibleSet main = enumerate_admissible(target.p2, target.p1, target.p0, opt);
        std::vector<BettiPair> oracle = oracle_enumerate(target.p2, target.p1, target.p0, box);
        rep = cross_check(main.elements, oracle, box);
        extra["complete"] = main.complete;
    } else if (va.mode == "torsion") {
        if (va.e < 1)
            throw InvalidInput("e must be >= 1");
        box.a_min = va.a_min.value_or(-va.max_value);
        box.a_max = va.a_max.value_or(va.max_value);
        args["e"] = va.e;
        args["d"] = va.d;
        TorsionSearch main = enumerate_torsion({va.e, va.d}, TorsionOptions{va.common.threads});
        std::vector<TorsionResolution> oracle = oracle_torsion(va.e, va.d, box);
        rep = cross_check(main.resolutions, oracle, box, va.e);
    } else {
        throw InvalidInput("unknown mode " + va.mode);
    }

    Json box_json = Json::object();
    box_json["max_value"] = box.max_value;
    box_json["max_a_len"] = box.max_a_len;
    box_json["max_b_len"] = box.max_b_len;
    if (va.mode == "torsion") {
        box_json["a_min"] = box.a_min;
        box_json["a_max"] = box.a_max;
    }
    args["box"] = std::move(box_json);
    Json result = encode_report(rep);
    for (auto& [k, v] : extra.items())
        result[k] = v;
    Output o;
    o.doc = document("verify", std::move(args), std::move(result));
    o.code = rep.status == CheckStatus::Mismatch ? 2 : 0;
    return o;
}

}  // namespace

Rat parse_rational(std::string_view text) { return Rat::parse(text); }

std::vector<Degree> parse_sequence(std::string_view text) {
    std::vector<Degree> out;
    if (trim(text).empty())
        return out;
    for (std::string_view part : split(text)) {
        Degree v = 0;
        if (!part.empty() && part.front() == '+')
            part.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
            throw InvalidInput("malformed integer \"" + std::string(part) + "\" in \"" + std::string(text) + "\"");
        out.push_back(v);
    }
    return out;
}

HilbPoly parse_poly(std::string_view text) {
    auto parts = split(text);
    if (parts.size() != 3)
        throw InvalidInput("expected three coefficients \"c2,c1,c0\", got \"" + std::string(text) + "\"");
    return {Rat::parse(parts[0]), Rat::parse(parts[1]), Rat::parse(parts[2])};
}

PValues parse_pvalues(std::string_view text) {
    auto parts = split(text);
    if (parts.size() != 3)
        throw InvalidInput("expected three values \"p2,p1,p0\", got \"" + std::string(text) + "\"");
    return {Rat::parse(parts[0]), Rat::parse(parts[1]), Rat::parse(parts[2])};
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical strata of Quot schemes on the quantum plane", "qplane"};
    app.require_subcommand(1, 1);

    QuotArgs qa;
    auto* quot = app.add_subcommand("quot", "candidate Betti tables of kernels of R^l -> N");
    quot->add_option("--l", qa.l, "rank of the free module")->required();
    quot->add_option("--p1", qa.p1, "Hilbert polynomial of N as \"c2,c1,c0\"")->required();
    quot->add_flag("--no-hf-filter", qa.no_hf, "keep tables with a negative h_N value");
    quot->add_flag("--no-rank-filter", qa.no_rank, "do not require 2 p2 <= l");
    quot->add_option("--max-nodes", qa.max_nodes, "stop the search after this many states (0 = no limit)");
    add_common(quot, qa.common, true);

    TorsionArgs ta;
    auto* torsion = app.add_subcommand("torsion", "numerical candidates for sheaves with Hilbert polynomial e t + d");
    torsion->add_option("--e", ta.e, "multiplicity")->required();
    torsion->add_option("--d", ta.d, "constant term")->required();
    add_common(torsion, ta.common, true);

    ReduceArgs ra;
    auto* reduce = app.add_subcommand("reduce", "run the reduction map to a terminal state");
    reduce->add_option("--a", ra.a, "generator degrees, e.g. \"1,1\"")->required();
    reduce->add_option("--b", ra.b, "relation degrees, e.g. \"2\"");
    reduce->add_flag("--trace", ra.trace, "print every intermediate state");
    reduce->add_flag("--verify", ra.verify, "audit the trace; exit 2 on a violated invariant");
    add_common(reduce, ra.common, false);

    CheckArgs ca;
    auto* check = app.add_subcommand("check", "report every failing admissibility inequality");
    check->add_option("--a", ca.a, "generator degrees")->required();
    check->add_option("--b", ca.b, "relation degrees");
    add_common(check, ca.common, false);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "compare the main search with the brute-force oracle");
    verify->add_option("--mode", va.mode, "quot or torsion")->required()->check(CLI::IsMember({"quot", "torsion"}));
    verify->add_option("--l", va.l, "quot target: rank");
    verify->add_option("--p1", va.p1, "quot target: Hilbert polynomial of N");
    verify->add_option("--p", va.p, "quot target: kernel p-values \"p2,p1,p0\"");
    verify->add_option("--e", va.e, "torsion target: multiplicity");
    verify->add_option("--d", va.d, "torsion target: constant term");
    verify->add_option("--max-value", va.max_value, "largest Betti entry in the box");
    verify->add_option("--max-len", va.max_len, "longest sequence in the box");
    verify->add_option("--max-b-len", va.max_b_len, "longest b sequence (default --max-len)");
    verify->add_option("--a-min", va.a_min, "torsion: smallest a entry (default -max-value)");
    verify->add_option("--a-max", va.a_max, "torsion: largest a entry (default max-value)");
    verify->add_option("--max-nodes", va.max_nodes, "stop the main search after this many states");
    add_common(verify, va.common, false);

    if (!args.empty() && !args.front().starts_with("-") && !app.get_subcommand_no_throw(args.front())) {
        err << "error: unknown subcommand \"" << args.front() << "\"\n" << app.help();
        return 1;
    }

    std::vector<std::string> storage{"qplane"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return 1;
    }

    const Common* common = nullptr;
    try {
        const auto start = std::chrono::steady_clock::now();
        Output o;
        if (quot->parsed()) {
            common = &qa.common;
            o = run_quot(qa);
        } else if (torsion->parsed()) {
            common = &ta.common;
            o = run_torsion(ta);
        } else if (reduce->parsed()) {
            common = &ra.common;
            o = run_reduce(ra);
        } else if (check->parsed()) {
            common = &ca.common;
            o = run_check(ca);
        } else {
            common = &va.common;
            o = run_verify(va);
        }
        std::string text = o.plain;
        if (!o.doc.is_null()) {
            if (common->timing) {
                std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
                o.doc["timing"] = Json::object({{"milliseconds", ms.count()}});
            }
            for (const Json& line : o.lines)
                text += line.dump() + "\n";
            text += (o.pretty ? o.doc.dump(2) : o.doc.dump()) + "\n";
        }
        emit(*common, text, out);
        return o.code;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qplane::cli
