// Batch command-line frontend: subcommands mirroring the library modules,
// stable JSON and text reports, and exit codes 0 (success / checks pass),
// 1 (mathematical failure), 2 (input error).
#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cechtower/json_io.hpp"
#include "cechtower/selftest.hpp"

namespace cechtower {

struct RunConfig {
    std::string command;                         // e.g. "cech cohomology"
    std::map<std::string, std::string> inputs;   // option name -> path, inline JSON or value
    std::string out;                             // artifact destination; empty = stdout
    std::string format = "text";                 // text | json
    std::uint64_t seed = 0;
};

struct DispatchResult {
    int exit_code = 0;
    std::string report;
};

// Input problems exit with code 2; mathematical failures with 1.
class CliInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace cli_detail {

inline json load_json_or_inline(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return json::parse(arg);
    return load_json_file(arg);
}

inline const std::string& need(const RunConfig& cfg, const std::string& key) {
    auto it = cfg.inputs.find(key);
    if (it == cfg.inputs.end() || it->second.empty())
        throw CliInputError("missing required option --" + key);
    return it->second;
}

inline bool has(const RunConfig& cfg, const std::string& key) {
    auto it = cfg.inputs.find(key);
    return it != cfg.inputs.end() && !it->second.empty();
}

inline int need_int(const RunConfig& cfg, const std::string& key) {
    const std::string& v = need(cfg, key);
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw CliInputError("option --" + key + " expects an integer, got '" + v + "'");
    }
}

inline std::pair<int, int> need_degree_window(const RunConfig& cfg) {
    const std::string& v = need(cfg, "degrees");
    auto dots = v.find("..");
    if (dots == std::string::npos)
        throw CliInputError("option --degrees expects the form a..b, got '" + v + "'");
    try {
        int a = std::stoi(v.substr(0, dots));
        int b = std::stoi(v.substr(dots + 2));
        return {a, b};
    } catch (const std::exception&) {
        throw CliInputError("option --degrees expects the form a..b, got '" + v + "'");
    }
}

inline std::vector<Int> parse_class_coords(const std::string& text) {
    std::vector<Int> coords;
    if (text.empty()) return coords;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) {
        try {
            coords.push_back(Int(part));
        } catch (const std::exception&) {
            throw CliInputError("bad class coordinate '" + part + "'");
        }
    }
    return coords;
}

inline ComplexPtr load_complex(const RunConfig& cfg) {
    return share(complex_from_json(load_json_or_inline(need(cfg, "complex")), "complex"));
}

inline std::string coords_string(const std::vector<Int>& coords) {
    std::ostringstream os;
    for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i];
    return os.str();
}

inline json coords_json(const std::vector<Int>& coords) {
    json arr = json::array();
    for (const Int& c : coords) arr.push_back(int_to_json(c));
    return arr;
}

// Emit an artifact: to --out as a file, otherwise as the report body.
inline DispatchResult emit_artifact(const RunConfig& cfg, const json& artifact,
                                    const std::string& summary) {
    DispatchResult r;
    if (!cfg.out.empty()) {
        save_json_file(cfg.out, artifact);
        if (cfg.format == "json") {
            json rep;
            rep["command"] = cfg.command;
            rep["out"] = cfg.out;
            rep["summary"] = summary;
            r.report = rep.dump(2) + "\n";
        } else {
            r.report = summary + "\nwrote " + cfg.out + "\n";
        }
    } else {
        r.report = artifact.dump(2) + "\n";
    }
    return r;
}

inline DispatchResult emit_report(const RunConfig& cfg, const json& jrep,
                                  const std::string& text, int exit_code) {
    DispatchResult r;
    r.exit_code = exit_code;
    r.report = cfg.format == "json" ? jrep.dump(2) + "\n" : text;
    return r;
}

// ---- command handlers ----------------------------------------------------

inline DispatchResult run_complex_validate(const RunConfig& cfg) {
    Complex c = complex_from_json(load_json_or_inline(need(cfg, "file")), "complex");
    json j;
    j["command"] = cfg.command;
    j["valid"] = true;
    j["dimension"] = c.dimension();
    json fv = json::array();
    for (std::size_t n : c.f_vector()) fv.push_back(n);
    j["f_vector"] = fv;
    j["euler_characteristic"] = c.euler_characteristic();
    std::ostringstream os;
    os << "valid simplicial complex\n";
    os << "dimension " << c.dimension() << ", f-vector (";
    auto f = c.f_vector();
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
    os << "), Euler characteristic " << c.euler_characteristic() << "\n";
    return emit_report(cfg, j, os.str(), 0);
}

inline DispatchResult run_complex_catalog(const RunConfig& cfg) {
    Complex c;
    try {
        c = catalog(need(cfg, "name"));
    } catch (const std::invalid_argument& e) {
        throw CliInputError(e.what());
    }
    return emit_artifact(cfg, complex_to_json(c),
                         "catalog complex '" + need(cfg, "name") + "'");
}

inline DispatchResult run_cech_cohomology(const RunConfig& cfg) {
    ComplexPtr x = load_complex(cfg);
    AbelianGroup g = group_from_json(load_json_or_inline(need(cfg, "group")), "group");
    int k = need_int(cfg, "degree");
    if (k < 0) throw CliInputError("--degree must be non-negative");
    CohomologyGroup h = cohomology(x, g, k);
    json j;
    j["command"] = cfg.command;
    j["degree"] = k;
    j["invariants"] = group_to_json(h.invariants());
    std::ostringstream os;
    os << "H^" << k << " = " << h.invariants().to_string() << "\n";
    if (has(cfg, "basis")) {
        json basis = json::array();
        for (const Cochain& b : h.basis()) basis.push_back(cochain_to_json(b));
        j["basis"] = basis;
        os << "basis representatives: " << h.basis().size() << "\n";
        if (cfg.format != "json")
            for (const Cochain& b : h.basis()) os << cochain_to_json(b).dump() << "\n";
    }
    return emit_report(cfg, j, os.str(), 0);
}

inline DispatchResult run_cech_verify(const RunConfig& cfg) {
    ComplexPtr x = load_complex(cfg);
    Cochain c = cochain_from_json(load_json_or_inline(need(cfg, "cochain")), x, "cochain");
    bool check_cocycle = has(cfg, "cocycle");
    bool check_coboundary = has(cfg, "coboundary");
    if (!check_cocycle && !check_coboundary) check_cocycle = true;
    json j;
    j["command"] = cfg.command;
    std::ostringstream os;
    bool ok = true;
    if (check_cocycle) {
        bool isz = is_cocycle(c);
        j["cocycle"] = isz;
        os << "cocycle: " << (isz ? "yes" : "no") << "\n";
        ok = ok && isz;
    }
    if (check_coboundary) {
        auto witness = is_coboundary(c);
        j["coboundary"] = witness.has_value();
        os << "coboundary: " << (witness ? "yes" : "no") << "\n";
        if (witness) j["witness"] = cochain_to_json(*witness);
        ok = ok && witness.has_value();
    }
    return emit_report(cfg, j, os.str(), ok ? 0 : 1);
}

inline DispatchResult run_cech_giraud(const RunConfig& cfg) {
    ComplexPtr x = load_complex(cfg);
    Cochain u = cochain_from_json(load_json_or_inline(need(cfg, "transitions")), x, "transitions");
    Cochain c = giraud_cocycle(TransitionData(x, u.group(), u));
    return emit_artifact(cfg, cochain_to_json(c), "classifying 2-cocycle (cocycle check: pass)");
}

inline DispatchResult run_cech_contract(const RunConfig& cfg) {
    ComplexPtr x = load_complex(cfg);
    Cochain c = cochain_from_json(load_json_or_inline(need(cfg, "cochain")), x, "cochain");
    int apex = need_int(cfg, "apex");
    Cochain h = cone_contraction(c, apex);
    bool verified = coboundary(h) == c;
    return emit_artifact(cfg, cochain_to_json(h),
                         std::string("contraction h with d(h) = c (verified: ") +
                             (verified ? "yes" : "no") + ")");
}

inline DispatchResult run_tower_validate(const RunConfig& cfg) {
    TowerCocycle t = tower_from_json(load_json_or_inline(need(cfg, "file")), "tower");
    TowerReport rep = validate_tower(t);
    json j;
    j["command"] = cfg.command;
    j["pass"] = rep.pass;
    json levels = json::array();
    std::ostringstream os;
    for (const LevelCheck& lc : rep.levels) {
        json l;
        l["level"] = lc.level;
        l["degree_ok"] = lc.degree_ok;
        l["group_ok"] = lc.group_ok;
        l["cocycle_ok"] = lc.cocycle_ok;
        levels.push_back(l);
        os << "level " << lc.level << ": degree " << (lc.degree_ok ? "ok" : "BAD") << ", group "
           << (lc.group_ok ? "ok" : "BAD") << ", cocycle " << (lc.cocycle_ok ? "ok" : "BAD")
           << "\n";
    }
    j["levels"] = levels;
    os << (rep.pass ? "tower valid" : "tower INVALID") << "\n";
    return emit_report(cfg, j, os.str(), rep.pass ? 0 : 1);
}

inline DispatchResult run_tower_classify(const RunConfig& cfg) {
    TowerCocycle t = tower_from_json(load_json_or_inline(need(cfg, "file")), "tower");
    TowerClass cls = classify(t);
    json j;
    j["command"] = cfg.command;
    j["class"] = coords_json(cls.coords);
    j["group"] = group_to_json(cls.group);
    std::ostringstream os;
    os << "class [" << coords_string(cls.coords) << "] in " << cls.group.to_string() << "\n";
    return emit_report(cfg, j, os.str(), 0);
}

inline DispatchResult run_tower_trivial(const RunConfig& cfg) {
    TowerCocycle t = tower_from_json(load_json_or_inline(need(cfg, "file")), "tower");
    bool trivial = is_trivial(t);
    json j;
    j["command"] = cfg.command;
    j["trivial"] = trivial;
    return emit_report(cfg, j, std::string("trivial: ") + (trivial ? "yes" : "no") + "\n", 0);
}

inline DispatchResult run_tower_equivalent(const RunConfig& cfg) {
    TowerCocycle t1 = tower_from_json(load_json_or_inline(need(cfg, "file")), "tower");
    TowerCocycle t2 = tower_from_json(load_json_or_inline(need(cfg, "other")), "tower");
    bool eq = equivalent(t1, t2);
    json j;
    j["command"] = cfg.command;
    j["equivalent"] = eq;
    return emit_report(cfg, j, std::string("equivalent: ") + (eq ? "yes" : "no") + "\n", 0);
}

inline DispatchResult run_tower_extend(const RunConfig& cfg) {
    TowerCocycle t = tower_from_json(load_json_or_inline(need(cfg, "file")), "tower");
    AbelianGroup link = group_from_json(load_json_or_inline(need(cfg, "link")), "link");
    std::vector<Int> coords =
        parse_class_coords(has(cfg, "class") ? cfg.inputs.at("class") : std::string());
    TowerCocycle extended = extend_from_class(t, link, coords);
    return emit_artifact(cfg, tower_to_json(extended),
                         "tower extended to height " + std::to_string(extended.height()));
}

inline DispatchResult run_spectral_pages(const RunConfig& cfg) {
    ComplexPtr x = load_complex(cfg);
    std::vector<AbelianGroup> stack =
        stack_from_json(load_json_or_inline(need(cfg, "stack")), "stack");
    int rmax = has(cfg, "rmax") ? need_int(cfg, "rmax") : 3;
    if (rmax < 1) throw CliInputError("--rmax must be >= 1");
    FilteredComplex fc = build_filtered(x, stack);
    json terms = json::array();
    std::ostringstream os;
    for (int p = 0; p < static_cast<int>(stack.size()); ++p)
        for (int k = 0; k <= x->dimension(); ++k)
            for (int r = 1; r <= rmax; ++r) {
                SpectralTerm term = e_page(fc, p, k - p, r);
                json tj;
                tj["p"] = p;
                tj["q"] = k - p;
                tj["r"] = r;
                tj["invariants"] = group_to_json(term.invariants);
                terms.push_back(tj);
                os << "E^{" << p << "," << (k - p) << "}_" << r << " = "
                   << term.invariants.to_string() << "\n";
            }
    json j;
    j["command"] = cfg.command;
    j["terms"] = terms;
    return emit_report(cfg, j, os.str(), 0);
}

inline DispatchResult run_spectral_prop31(const RunConfig& cfg) {
    ComplexPtr x = load_complex(cfg);
    AbelianGroup l0 = group_from_json(load_json_or_inline(need(cfg, "l0")), "l0");
    AbelianGroup ln = group_from_json(load_json_or_inline(need(cfg, "ln")), "ln");
    int n = need_int(cfg, "n");
    if (n < 1) throw CliInputError("--n must be >= 1");
    auto [lo, hi] = need_degree_window(cfg);
    std::vector<AbelianGroup> stack(static_cast<std::size_t>(n) + 1, AbelianGroup::zero());
    stack.front() = l0;
    stack.back() = ln;
    FilteredComplex fc = build_filtered(x, stack);
    FiltrationLesReport rep = filtration_les(fc, lo, hi);
    json j;
    j["command"] = cfg.command;
    j["pass"] = rep.pass;
    json nodes = json::array();
    std::ostringstream os;
    for (const FiltrationLesNode& node : rep.nodes) {
        json nj;
        nj["label"] = node.label;
        nj["exact"] = node.exact;
        nj["image"] = group_to_json(node.image);
        nj["kernel"] = group_to_json(node.kernel);
        nodes.push_back(nj);
        os << node.label << ": image " << node.image.to_string() << ", kernel "
           << node.kernel.to_string() << (node.exact ? " (exact)" : " (NOT EXACT)") << "\n";
    }
    j["nodes"] = nodes;
    os << (rep.pass ? "sequence exact" : "sequence NOT exact") << "\n";
    return emit_report(cfg, j, os.str(), rep.pass ? 0 : 1);
}

inline DispatchResult run_les(const RunConfig& cfg) {
    ComplexPtr x = load_complex(cfg);
    ShortExactSequence s = ses_from_json(load_json_or_inline(need(cfg, "ses")), "ses");
    auto [lo, hi] = need_degree_window(cfg);
    LesReport rep = long_exact_sequence(s, x, lo, hi);
    json j;
    j["command"] = cfg.command;
    j["pass"] = rep.pass;
    json nodes = json::array();
    std::ostringstream os;
    for (const LesNode& node : rep.nodes) {
        json nj;
        nj["label"] = node.label;
        nj["group"] = group_to_json(node.group);
        nj["checked"] = node.checked;
        if (node.checked) {
            nj["exact"] = node.exact;
            nj["image"] = group_to_json(node.image);
            nj["kernel"] = group_to_json(node.kernel);
        }
        nodes.push_back(nj);
        os << node.label << " = " << node.group.to_string();
        if (node.checked) os << (node.exact ? " (exact)" : " (NOT EXACT)");
        os << "\n";
    }
    j["nodes"] = nodes;
    os << (rep.pass ? "sequence exact" : "sequence NOT exact") << "\n";
    return emit_report(cfg, j, os.str(), rep.pass ? 0 : 1);
}

inline DispatchResult run_les_bockstein(const RunConfig& cfg) {
    ComplexPtr x = load_complex(cfg);
    int p = need_int(cfg, "p");
    if (p < 2) throw CliInputError("--p must be >= 2");
    int k = need_int(cfg, "degree");
    if (k < 0) throw CliInputError("--degree must be non-negative");
    ShortExactSequence s = ses_mod_square(p);
    CohomologyGroup src = cohomology(x, s.quot, k);
    CohomologyGroup dst = cohomology(x, s.sub, k + 1);
    std::vector<std::vector<Int>> cols;
    for (const Cochain& rep : src.basis()) cols.push_back(connecting(s, rep, dst));
    IntMat d = IntMat::from_columns(dst.invariants().coord_count(), cols);
    json j;
    j["command"] = cfg.command;
    j["source"] = group_to_json(src.invariants());
    j["target"] = group_to_json(dst.invariants());
    j["matrix"] = matrix_to_json(d);
    std::ostringstream os;
    os << "bockstein H^" << k << "(X, Z/" << p << ") -> H^" << k + 1 << "(X, Z/" << p << ")\n";
    os << "source " << src.invariants().to_string() << ", target " << dst.invariants().to_string()
       << "\n";
    os << "matrix " << matrix_to_json(d).dump() << "\n";
    return emit_report(cfg, j, os.str(), 0);
}

inline DispatchResult run_selftest_cmd(const RunConfig& cfg) {
    SelftestReport rep = run_selftest(cfg.seed);
    json j;
    j["command"] = cfg.command;
    j["seed"] = cfg.seed;
    j["pass"] = rep.pass;
    json criteria = json::array();
    for (const CriterionResult& c : rep.criteria) {
        json cj;
        cj["id"] = c.id;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        criteria.push_back(cj);
    }
    j["criteria"] = criteria;
    return emit_report(cfg, j, render_selftest_text(rep), rep.pass ? 0 : 1);
}

}  // namespace cli_detail

// Executes a parsed configuration; all file access happens here.
inline DispatchResult dispatch(const RunConfig& cfg) {
    using namespace cli_detail;
    try {
        if (cfg.format != "text" && cfg.format != "json")
            throw CliInputError("--format must be text or json");
        if (cfg.command == "complex validate") return run_complex_validate(cfg);
        if (cfg.command == "complex catalog") return run_complex_catalog(cfg);
        if (cfg.command == "cech cohomology") return run_cech_cohomology(cfg);
        if (cfg.command == "cech verify") return run_cech_verify(cfg);
        if (cfg.command == "cech giraud") return run_cech_giraud(cfg);
        if (cfg.command == "cech contract") return run_cech_contract(cfg);
        if (cfg.command == "tower validate") return run_tower_validate(cfg);
        if (cfg.command == "tower classify") return run_tower_classify(cfg);
        if (cfg.command == "tower trivial") return run_tower_trivial(cfg);
        if (cfg.command == "tower equivalent") return run_tower_equivalent(cfg);
        if (cfg.command == "tower extend") return run_tower_extend(cfg);
        if (cfg.command == "spectral pages") return run_spectral_pages(cfg);
        if (cfg.command == "spectral prop31") return run_spectral_prop31(cfg);
        if (cfg.command == "les run") return run_les(cfg);
        if (cfg.command == "les bockstein") return run_les_bockstein(cfg);
        if (cfg.command == "selftest") return run_selftest_cmd(cfg);
        throw CliInputError("unknown command '" + cfg.command + "'");
    } catch (const CliInputError& e) {
        return {2, std::string("input error: ") + e.what() + "\n"};
    } catch (const SchemaError& e) {
        return {2, std::string("input error: ") + e.what() + "\n"};
    } catch (const json::parse_error& e) {
        return {2, std::string("input error: malformed JSON: ") + e.what() + "\n"};
    } catch (const std::ios_base::failure& e) {
        return {2, std::string("input error: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {1, std::string("failure: ") + e.what() + "\n"};
    } catch (const std::logic_error& e) {
        return {1, std::string("internal failure: ") + e.what() + "\n"};
    } catch (const std::runtime_error& e) {
        return {2, std::string("input error: ") + e.what() + "\n"};
    }
}

// Parses "prog-less" argv into a RunConfig and dispatches it.
inline DispatchResult dispatch_args(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"exact Čech cohomology, gerbed-tower and spectral-sequence toolkit"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format, "report format: text|json");
        cmd->add_option("--out", cfg.out, "write the produced artifact to this file");
    };
    auto bind = [&](CLI::App* cmd, const std::string& name) {
        cmd->callback([&cfg, name]() { cfg.command = name; });
        add_common(cmd);
    };
    auto opt = [&](CLI::App* cmd, const std::string& flag, const std::string& help,
                   bool required = false) {
        auto* o = cmd->add_option("--" + flag, cfg.inputs[flag], help);
        if (required) o->required();
    };
    auto positional = [&](CLI::App* cmd, const std::string& key, const std::string& help) {
        cmd->add_option(key, cfg.inputs[key], help)->required();
    };
    auto flag = [&](CLI::App* cmd, const std::string& name, const std::string& help) {
        cmd->add_flag_callback("--" + name, [&cfg, name]() { cfg.inputs[name] = "1"; }, help);
    };

    auto* complex_cmd = app.add_subcommand("complex", "simplicial complex utilities");
    complex_cmd->require_subcommand(1);
    {
        auto* v = complex_cmd->add_subcommand("validate", "validate a complex file");
        bind(v, "complex validate");
        positional(v, "file", "complex JSON file");
        auto* c = complex_cmd->add_subcommand("catalog", "emit a catalog complex");
        bind(c, "complex catalog");
        positional(c, "name", "catalog name");
    }

    auto* cech_cmd = app.add_subcommand("cech", "cochains and cohomology");
    cech_cmd->require_subcommand(1);
    {
        auto* h = cech_cmd->add_subcommand("cohomology", "compute H^k(X, G)");
        bind(h, "cech cohomology");
        opt(h, "complex", "complex JSON", true);
        opt(h, "group", "coefficient group JSON", true);
        opt(h, "degree", "degree k", true);
        flag(h, "basis", "include basis representatives");

        auto* v = cech_cmd->add_subcommand("verify", "check cocycle/coboundary properties");
        bind(v, "cech verify");
        opt(v, "complex", "complex JSON", true);
        opt(v, "cochain", "cochain JSON", true);
        flag(v, "cocycle", "check the cocycle condition");
        flag(v, "coboundary", "check for a coboundary witness");

        auto* g = cech_cmd->add_subcommand("giraud", "classifying 2-cocycle of transition data");
        bind(g, "cech giraud");
        opt(g, "complex", "complex JSON", true);
        opt(g, "transitions", "degree-1 cochain JSON", true);

        auto* k = cech_cmd->add_subcommand("contract", "trivialize a cocycle on a cone");
        bind(k, "cech contract");
        opt(k, "complex", "complex JSON", true);
        opt(k, "cochain", "cocycle JSON", true);
        opt(k, "apex", "cone apex vertex", true);
    }

    auto* tower_cmd = app.add_subcommand("tower", "gerbed-tower cocycle families");
    tower_cmd->require_subcommand(1);
    {
        auto* v = tower_cmd->add_subcommand("validate", "per-level tower report");
        bind(v, "tower validate");
        positional(v, "file", "tower JSON file");
        auto* c = tower_cmd->add_subcommand("classify", "top class in H^{n+1}(X, L_n)");
        bind(c, "tower classify");
        positional(c, "file", "tower JSON file");
        auto* t = tower_cmd->add_subcommand("trivial", "is the top class zero");
        bind(t, "tower trivial");
        positional(t, "file", "tower JSON file");
        auto* e = tower_cmd->add_subcommand("equivalent", "compare two towers");
        bind(e, "tower equivalent");
        positional(e, "file", "first tower JSON file");
        positional(e, "other", "second tower JSON file");
        auto* x = tower_cmd->add_subcommand("extend", "append a class as the next cocycle");
        bind(x, "tower extend");
        positional(x, "file", "tower JSON file");
        opt(x, "link", "next link group JSON", true);
        opt(x, "class", "class coordinates a,b,...");
    }

    auto* spectral_cmd = app.add_subcommand("spectral", "filtered-complex spectral terms");
    spectral_cmd->require_subcommand(1);
    {
        auto* p = spectral_cmd->add_subcommand("pages", "table of E^{pq}_r invariants");
        bind(p, "spectral pages");
        opt(p, "complex", "complex JSON", true);
        opt(p, "stack", "JSON array of link groups", true);
        opt(p, "rmax", "largest page (default 3)");
        auto* q = spectral_cmd->add_subcommand("prop31", "two-column long exact sequence");
        bind(q, "spectral prop31");
        opt(q, "complex", "complex JSON", true);
        opt(q, "l0", "bottom link group JSON", true);
        opt(q, "ln", "top link group JSON", true);
        opt(q, "n", "top filtration index", true);
        opt(q, "degrees", "degree window a..b", true);
    }

    auto* les_cmd = app.add_subcommand("les", "long exact coefficient sequences");
    les_cmd->require_subcommand(1);
    {
        auto* r = les_cmd->add_subcommand("run", "long exact sequence report");
        bind(r, "les run");
        opt(r, "complex", "complex JSON", true);
        opt(r, "ses", "short exact sequence JSON", true);
        opt(r, "degrees", "degree window a..b", true);
        auto* b = les_cmd->add_subcommand("bockstein", "mod-p Bockstein matrix");
        bind(b, "les bockstein");
        opt(b, "complex", "complex JSON", true);
        opt(b, "p", "prime modulus", true);
        opt(b, "degree", "source degree k", true);
    }

    auto* st = app.add_subcommand("selftest", "run the acceptance suite");
    bind(st, "selftest");
    st->add_option("--seed", cfg.seed, "random seed (default 0)");

    std::vector<const char*> argv;
    argv.push_back("cechtower");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream os;
        os << app.help();
        return {0, os.str()};
    } catch (const CLI::ParseError& e) {
        return {2, std::string("input error: ") + e.what() + "\n"};
    }
    return dispatch(cfg);
}

}  // namespace cechtower
