#pragma once

#include <algorithm>
#include <charconv>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "hookcomb/hookcomb.hpp"

namespace hookcomb::cli {

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Bad input detected after argument parsing; reported on stderr with exit 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Format { Text, Json, Csv };

inline const std::map<std::string, Format> kFormats = {{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

// ---------------------------------------------------------------------------
// Parsing helpers
// ---------------------------------------------------------------------------

inline std::int64_t parse_int(std::string_view s, const std::string& what) {
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size())
        throw UsageError(what + ": expected an integer, got '" + std::string(s) + "'");
    return v;
}

/// "6,5,4,3" -> Partition
inline Partition parse_partition(std::string_view s) {
    std::vector<Part> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        parts.push_back(parse_int(s.substr(start, comma - start), "partition"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return make_partition(std::move(parts));
}

/// "N" or "A..B"
inline std::pair<Part, Part> parse_range(std::string_view s) {
    const auto dots = s.find("..");
    if (dots == std::string_view::npos) {
        const Part n = parse_int(s, "perimeter");
        return {n, n};
    }
    const Part a = parse_int(s.substr(0, dots), "perimeter range start");
    const Part b = parse_int(s.substr(dots + 2), "perimeter range end");
    if (a > b) throw UsageError("perimeter range is empty: " + std::string(s));
    return {a, b};
}

inline ConstraintClass parse_class(const std::string& spec) {
    try {
        return parse_class_spec(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

/// "x=1,y=-1" -> {x: 1, y: -1}
inline std::map<Var, std::int64_t> parse_eval(std::string_view s) {
    std::map<Var, std::int64_t> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const auto comma = std::min(s.find(',', start), s.size());
        const auto item = s.substr(start, comma - start);
        if (item.size() < 3 || item[1] != '=' || (item[0] != 'x' && item[0] != 'y'))
            throw UsageError("--eval expects x=<int>,y=<int>, got '" + std::string(item) + "'");
        const Var v = item[0] == 'x' ? Var::x : Var::y;
        if (out.contains(v)) throw UsageError(std::string("--eval sets ") + item[0] + " twice");
        out[v] = parse_int(item.substr(2), "--eval value");
        start = comma + 1;
    }
    return out;
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

struct EnumerateArgs {
    Part perimeter = 0;
    std::string cls = "any";
    std::optional<Part> parts, largest, rank;
    std::string format = "text";
};

inline std::optional<RefinementKey> refinement_filter(const EnumerateArgs& a) {
    const int given = int(a.parts.has_value()) + int(a.largest.has_value()) + int(a.rank.has_value());
    if (given > 1) throw UsageError("use at most one of --parts, --largest, --rank");
    if (a.parts) return RefinementKey::num_parts(*a.parts);
    if (a.largest) return RefinementKey::largest_part(*a.largest);
    if (a.rank) return RefinementKey::rank(*a.rank);
    return std::nullopt;
}

inline const char* key_name(RefinementKey::Kind k) {
    switch (k) {
    case RefinementKey::Kind::LargestPart: return "largest";
    case RefinementKey::Kind::NumParts: return "parts";
    case RefinementKey::Kind::Rank: return "rank";
    }
    return "?";
}

inline void check_perimeter(Part n) {
    if (n < 1 || n > kMaxEnumerablePerimeter)
        throw UsageError("perimeter must be in 1.." + std::to_string(kMaxEnumerablePerimeter));
}

inline int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
    check_perimeter(a.perimeter);
    const ConstraintClass c = parse_class(a.cls);
    const auto key = refinement_filter(a);
    const Format fmt = kFormats.at(a.format);

    std::vector<Partition> found;
    for (const auto& p : enumerate_by_perimeter(a.perimeter, c))
        if (!key || matches(p, *key)) found.push_back(p);

    switch (fmt) {
    case Format::Text:
        for (const auto& p : found) out << to_string(p) << '\n';
        break;
    case Format::Csv:
        out << "partition,largest,length,size,perimeter,rank\n";
        for (const auto& p : found)
            out << csv_quote(to_string(p)) << ',' << p.largest() << ',' << p.length() << ',' << p.size() << ','
                << p.perimeter() << ',' << p.rank() << '\n';
        break;
    case Format::Json: {
        Json j = {{"perimeter", a.perimeter}, {"class", to_string(c)}};
        j["filter"] = key ? Json{{"key", key_name(key->kind)}, {"value", key->value}} : Json(nullptr);
        Json list = Json::array();
        for (const auto& p : found) list.push_back(to_json(p));
        j["partitions"] = std::move(list);
        out << j.dump(2) << '\n';
        break;
    }
    }
    return kOk;
}

struct CountArgs {
    std::string perimeter;
    std::string cls = "any";
    bool split_parity = false;
    std::string format = "text";
};

inline int cmd_count(const CountArgs& a, std::ostream& out) {
    const auto [lo, hi] = parse_range(a.perimeter);
    if (lo < 1) throw UsageError("perimeter must be >= 1");
    const ConstraintClass c = parse_class(a.cls);
    if (a.split_parity && c.kind() != ConstraintClass::Kind::Distinct)
        throw UsageError("--split-parity needs --class distinct");
    const Format fmt = kFormats.at(a.format);

    struct Row {
        Part n;
        BigInt count;
        std::optional<ParitySplit> split;
    };
    std::vector<Row> rows;
    for (Part n = lo; n <= hi; ++n) {
        Row r{n, count_by_perimeter(n, c), std::nullopt};
        if (a.split_parity) r.split = count_parity_split(n);
        rows.push_back(std::move(r));
    }

    switch (fmt) {
    case Format::Text:
        out << (a.split_parity ? "# perimeter count even odd e\n" : "# perimeter count\n");
        for (const auto& r : rows) {
            out << r.n << ' ' << r.count;
            if (r.split) out << ' ' << r.split->even << ' ' << r.split->odd << ' ' << excess_e(r.n);
            out << '\n';
        }
        break;
    case Format::Csv:
        out << (a.split_parity ? "perimeter,count,even,odd,e\n" : "perimeter,count\n");
        for (const auto& r : rows) {
            out << r.n << ',' << r.count;
            if (r.split) out << ',' << r.split->even << ',' << r.split->odd << ',' << excess_e(r.n);
            out << '\n';
        }
        break;
    case Format::Json: {
        Json list = Json::array();
        for (const auto& r : rows) {
            Json j = {{"perimeter", r.n}, {"count", r.count.str()}};
            if (r.split) {
                j["even"] = r.split->even.str();
                j["odd"] = r.split->odd.str();
                j["e"] = excess_e(r.n);
            }
            list.push_back(std::move(j));
        }
        out << Json{{"class", to_string(c)}, {"rows", std::move(list)}}.dump(2) << '\n';
        break;
    }
    }
    return kOk;
}

struct GfArgs {
    std::string cls = "any";
    std::optional<int> qbound;
    std::string eval;
    std::string format = "text";
};

inline int cmd_gf(const GfArgs& a, std::ostream& out) {
    const ConstraintClass c = parse_class(a.cls);
    const int qbound = a.qbound ? *a.qbound : default_qbound(10);
    if (qbound < 1) throw UsageError("--qbound must be >= 1");
    const Format fmt = kFormats.at(a.format);

    MultiPoly series = expand(gf_of_class(c), qbound);
    if (!a.eval.empty()) {
        const auto values = parse_eval(a.eval);
        VarSet target = kQ;
        for (Var v : {Var::x, Var::y})
            if (!values.contains(v)) target = target.with(v);
        std::map<Var, MultiPoly> assignment;
        for (Var v : {Var::x, Var::y, Var::q}) {
            const auto it = values.find(v);
            assignment.emplace(v, it != values.end() ? MultiPoly::constant(it->second, target)
                                                     : MultiPoly::variable(v, target));
        }
        series = substitute(series, assignment);
    }

    switch (fmt) {
    case Format::Text: out << to_string(series) << '\n'; break;
    case Format::Json: out << to_json(series).dump(2) << '\n'; break;
    case Format::Csv: {
        std::vector<Var> cols;
        for (Var v : kPrintOrder)
            if (series.vars().contains(v)) cols.push_back(v);
        out << "coefficient";
        for (Var v : cols) out << ',' << var_name(v);
        out << '\n';
        for (const auto& [e, coeff] : series.terms()) {
            out << coeff;
            for (Var v : cols) out << ',' << degree(e, v);
            out << '\n';
        }
        break;
    }
    }
    return kOk;
}

struct VerifyArgs {
    std::string id;
    CheckOptions opts;
    std::string cls;
    bool timing = false;
    std::string format = "text";
};

inline int cmd_verify(VerifyArgs a, std::ostream& out) {
    if (a.id != "all" && !find_check(a.id)) throw UsageError("unknown check id '" + a.id + "'");
    if (!a.cls.empty()) a.opts.cls = parse_class(a.cls);
    const Format fmt = kFormats.at(a.format);

    std::vector<TheoremReport> reports;
    try {
        reports = run_checks(a.id, a.opts);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });

    switch (fmt) {
    case Format::Text:
        for (const auto& r : reports) out << to_text(r, a.timing) << '\n';
        break;
    case Format::Json: {
        Json list = Json::array();
        for (const auto& r : reports) list.push_back(to_json(r, a.timing));
        out << list.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "check_id,status,params,what" << (a.timing ? ",elapsed_ms" : "") << '\n';
        for (const auto& r : reports) {
            out << r.check_id << ',' << to_string(r.status) << ',' << csv_quote(r.params.dump()) << ','
                << csv_quote(r.counterexample ? r.counterexample->what : "");
            if (a.timing) out << ',' << r.elapsed.count();
            out << '\n';
        }
        break;
    }
    return all_pass ? kOk : kFailed;
}

struct TableArgs {
    int id = 0;
    std::string format = "text";
};

inline int cmd_table(const TableArgs& a, std::ostream& out) {
    if (a.id < 1 || a.id > 4) throw UsageError("table id must be 1, 2, 3 or 4");
    const PairingTable t = make_table(a.id);
    const Format fmt = kFormats.at(a.format);

    auto join = [](const std::vector<std::string>& cells, const char* sep) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? sep : "") + cells[i];
        return s;
    };

    switch (fmt) {
    case Format::Text:
        out << "# table " << t.id << ": " << t.caption << '\n';
        out << "# " << join(t.headers, " | ") << '\n';
        for (const auto& g : t.groups) {
            if (!g.label.empty()) out << "# " << g.label << '\n';
            for (const auto& row : g.rows) {
                std::vector<std::string> cells;
                for (const auto& p : row) cells.push_back(to_string(p));
                out << join(cells, " | ") << '\n';
            }
        }
        break;
    case Format::Csv:
        out << "group," << join(t.headers, ",") << '\n';
        for (const auto& g : t.groups)
            for (const auto& row : g.rows) {
                out << csv_quote(g.label);
                for (const auto& p : row) out << ',' << csv_quote(to_string(p));
                out << '\n';
            }
        break;
    case Format::Json: {
        Json groups = Json::array();
        for (const auto& g : t.groups) {
            Json rows = Json::array();
            for (const auto& row : g.rows) {
                Json cells = Json::array();
                for (const auto& p : row) cells.push_back(to_json(p));
                rows.push_back(std::move(cells));
            }
            groups.push_back({{"label", g.label}, {"rows", std::move(rows)}});
        }
        out << Json{{"id", t.id}, {"caption", t.caption}, {"headers", t.headers}, {"groups", std::move(groups)}}.dump(2)
            << '\n';
        break;
    }
    }
    return kOk;
}

/// Reads `enumerate --format json` output and checks it against a fresh
/// enumeration with the same perimeter, class and filter. Prints the parsed
/// list in text form; exit 1 when the listing is wrong.
inline int cmd_validate(std::istream& in, std::ostream& out, std::ostream& err) {
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }

    EnumerateArgs a;
    std::vector<Partition> listed;
    try {
        a.perimeter = j.at("perimeter").get<Part>();
        a.cls = j.at("class").get<std::string>();
        const Json& f = j.at("filter");
        if (!f.is_null()) {
            const auto key = f.at("key").get<std::string>();
            const auto value = f.at("value").get<Part>();
            if (key == "parts") a.parts = value;
            else if (key == "largest") a.largest = value;
            else if (key == "rank") a.rank = value;
            else throw UsageError("unknown filter key '" + key + "'");
        }
        for (const auto& p : j.at("partitions")) listed.push_back(make_partition(p.get<std::vector<Part>>()));
    } catch (const Json::exception& e) {
        throw UsageError(std::string("not an enumerate listing: ") + e.what());
    } catch (const PartitionError& e) {
        err << "invalid partition: " << e.what() << '\n';
        return kFailed;
    }

    for (const auto& p : listed) out << to_string(p) << '\n';

    std::ostringstream fresh;
    EnumerateArgs b = a;
    b.format = "json";
    cmd_enumerate(b, fresh);
    if (Json::parse(fresh.str()) != j) {
        err << "listing does not match the enumeration for perimeter " << a.perimeter << ", class " << a.cls << '\n';
        return kFailed;
    }
    return kOk;
}

struct ProfileArgs {
    std::string partition;
    std::string word;
    std::optional<Part> blocks;
};

inline std::string describe_blocks(const BlockDecomposition& b) {
    std::string s = "initial " + std::to_string(b.initial);
    for (const auto& m : b.middles)
        s += std::string(m.type == BlockType::TypeI ? "; I " : "; II ") + std::to_string(m.trailing);
    return s;
}

inline int cmd_profile(const ProfileArgs& a, std::ostream& out, std::ostream& err) {
    if (a.partition.empty() == a.word.empty()) throw UsageError("give exactly one of --partition, --word");
    Partition p = make_partition({1});
    ProfileWord w = ProfileWord::parse("EN");
    try {
        if (!a.partition.empty()) {
            p = parse_partition(a.partition);
            w = to_profile(p);
        } else {
            w = ProfileWord::parse(a.word);
            p = from_profile(w);
        }
    } catch (const PartitionError& e) {
        throw UsageError(e.what());
    } catch (const ProfileError& e) {
        throw UsageError(e.what());
    }
    out << "partition " << to_string(p) << "\nword " << w.str() << "\nperimeter " << p.perimeter() << '\n';
    if (a.blocks) {
        if (*a.blocks < 1) throw UsageError("--blocks needs d >= 1");
        try {
            out << "blocks " << describe_blocks(decompose_blocks(w, *a.blocks)) << '\n';
        } catch (const BlockGrammarError& e) {
            err << e.what() << '\n';
            return kFailed;
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

/// Runs the CLI on args (without the program name). Exit codes: 0 success,
/// 1 verification failure, 2 usage error.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partitions graded by perimeter (largest hook length)", "hookcomb"};
    app.require_subcommand(1);
    const auto format_check = CLI::IsMember({"text", "json", "csv"});

    EnumerateArgs ea;
    auto* enumerate = app.add_subcommand("enumerate", "List partitions with a given perimeter");
    enumerate->add_option("--perimeter", ea.perimeter, "Perimeter n")->required();
    enumerate->add_option("--class", ea.cls, "any | distinct | odd | ddistinct:d | modone:d | gclass:d");
    enumerate->add_option("--parts", ea.parts, "Keep partitions with this many parts");
    enumerate->add_option("--largest", ea.largest, "Keep partitions with this largest part");
    enumerate->add_option("--rank", ea.rank, "Keep partitions with this rank");
    enumerate->add_option("--format", ea.format)->check(format_check);

    CountArgs ca;
    auto* count = app.add_subcommand("count", "Count partitions by perimeter");
    count->add_option("--perimeter", ca.perimeter, "N or A..B")->required();
    count->add_option("--class", ca.cls);
    count->add_flag("--split-parity", ca.split_parity, "Split distinct counts by parity of the length");
    count->add_option("--format", ca.format)->check(format_check);

    GfArgs ga;
    auto* gf = app.add_subcommand("gf", "Expand a class's generating function");
    gf->add_option("--class", ga.cls);
    gf->add_option("--qbound", ga.qbound, "Truncation degree in q");
    gf->add_option("--eval", ga.eval, "Substitute integers, e.g. x=1,y=-1");
    gf->add_option("--format", ga.format)->check(format_check);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run identity checks");
    verify->add_option("check", va.id, "Check id or 'all'")->required();
    verify->add_option("--max-n", va.opts.max_n);
    verify->add_option("--max-size", va.opts.max_size);
    verify->add_option("--d", va.opts.d);
    verify->add_option("--qbound", va.opts.qbound);
    verify->add_option("--class", va.cls, "Class for gf-coefficients");
    verify->add_flag("--timing", va.timing, "Include elapsed time");
    verify->add_option("--format", va.format)->check(format_check);
    std::string list_help = "Checks:";
    for (const auto& c : check_registry()) list_help += "\n  " + c.id + "  " + c.summary;
    verify->footer(list_help);

    TableArgs ta;
    auto* table = app.add_subcommand("table", "Print one of the pairing tables 1-4");
    table->add_option("id", ta.id)->required();
    table->add_option("--format", ta.format)->check(format_check);

    auto* validate = app.add_subcommand("validate", "Check an enumerate JSON listing read from stdin");

    ProfileArgs pa;
    auto* profile = app.add_subcommand("profile", "Convert between partitions and profile words");
    profile->add_option("--partition", pa.partition, "Parts, largest first, e.g. 2,2,1");
    profile->add_option("--word", pa.word, "Word over E and N");
    profile->add_option("--blocks", pa.blocks, "Also print the G_d block decomposition");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*enumerate) return cmd_enumerate(ea, out);
        if (*count) return cmd_count(ca, out);
        if (*gf) return cmd_gf(ga, out);
        if (*verify) return cmd_verify(va, out);
        if (*table) return cmd_table(ta, out);
        if (*validate) return cmd_validate(in, out, err);
        if (*profile) return cmd_profile(pa, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace hookcomb::cli
