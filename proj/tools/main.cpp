// gamma2 command-line front end. Talks to the library exclusively through the
// C API in gamma2/gamma2.h; JSON produced by the library is canonical and is
// passed through untouched, with CSV/text renderings derived from it here.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gamma2/gamma2.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitInternal = 4;

int exit_code(g2_status status) {
    switch (status) {
        case G2_OK: return kExitOk;
        case G2_CHECK_FAILED: return kExitCheckFailed;
        case G2_INVALID_INPUT: return kExitInputError;
        case G2_CAP_EXCEEDED: return kExitCapExceeded;
        case G2_INTERNAL_ERROR: return kExitInternal;
    }
    return kExitInternal;
}

struct CString {
    char* ptr = nullptr;
    ~CString() { g2_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

struct GraphHandle {
    g2_graph* ptr = nullptr;
    ~GraphHandle() { g2_graph_free(ptr); }
};

[[noreturn]] void die(int code, const std::string& message) {
    std::cerr << "gamma2: " << message << "\n";
    std::exit(code);
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) die(kExitInputError, "cannot open output file " + out_path);
    out << payload;
}

std::vector<int32_t> parse_int_list(const std::string& csv) {
    std::vector<int32_t> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (...) {
            die(kExitInputError, "expected comma-separated integers, got \"" + csv + "\"");
        }
    }
    return out;
}

// Shared description of where a graph comes from: a family spec or a file.
struct GraphSource {
    std::string input_path;
    std::vector<std::string> family; // name then integer parameters
    std::string orders;              // abelian-cayley
    std::vector<std::string> gens;   // abelian-cayley / perm-cayley tuples
    int symbols = 0;                 // perm-cayley

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", input_path, "read a graph from an edge-list or JSON file");
        cmd->add_option("family", family,
                        "family name and integer parameters, e.g. `hypercube 4`");
        cmd->add_option("--orders", orders, "abelian-cayley cyclic orders, e.g. 2,2,3");
        cmd->add_option("--gen", gens, "generator tuple (repeatable), e.g. --gen 1,0,2");
        cmd->add_option("--symbols", symbols, "perm-cayley symbol count");
    }

    g2_graph* build() const {
        if (!input_path.empty() && !family.empty())
            die(kExitInputError, "give exactly one input source: --input or a family spec");

        g2_graph* g = nullptr;
        g2_status status;
        if (!input_path.empty()) {
            std::ifstream in(input_path, std::ios::binary);
            if (!in) die(kExitInputError, "cannot read " + input_path);
            std::stringstream buf;
            buf << in.rdbuf();
            std::string text = buf.str();
            std::size_t first = text.find_first_not_of(" \t\r\n");
            bool json = first != std::string::npos && text[first] == '{';
            status = json ? g2_graph_parse_json(text.c_str(), &g)
                          : g2_graph_parse_edge_list(text.c_str(), &g);
            if (status != G2_OK) die(exit_code(status), g2_last_error());
            return g;
        }
        if (family.empty())
            die(kExitInputError, "give exactly one input source: --input or a family spec");

        const std::string& name = family[0];
        std::vector<int32_t> params;
        for (std::size_t i = 1; i < family.size(); ++i) {
            try {
                params.push_back(std::stoi(family[i]));
            } catch (...) {
                die(kExitInputError, "family parameter \"" + family[i] + "\" is not an integer");
            }
        }
        auto want = [&](std::size_t k) {
            if (params.size() != k)
                die(kExitInputError, name + " takes " + std::to_string(k) +
                                         " integer parameter(s), got " +
                                         std::to_string(params.size()));
        };

        if (name == "abelian-cayley") {
            want(0);
            std::vector<int32_t> ord = parse_int_list(orders);
            if (ord.empty()) die(kExitInputError, "abelian-cayley needs --orders");
            if (gens.empty()) die(kExitInputError, "abelian-cayley needs at least one --gen");
            std::vector<int32_t> flat;
            for (const auto& gen : gens) {
                std::vector<int32_t> tuple = parse_int_list(gen);
                if (tuple.size() != ord.size())
                    die(kExitInputError, "generator arity must match --orders");
                flat.insert(flat.end(), tuple.begin(), tuple.end());
            }
            status = g2_gen_abelian_cayley(ord.data(), static_cast<int32_t>(ord.size()),
                                           flat.data(), static_cast<int32_t>(gens.size()), &g);
        } else if (name == "perm-cayley") {
            want(0);
            if (symbols < 2) die(kExitInputError, "perm-cayley needs --symbols");
            if (gens.empty()) die(kExitInputError, "perm-cayley needs at least one --gen");
            std::vector<int32_t> flat;
            for (const auto& gen : gens) {
                std::vector<int32_t> tuple = parse_int_list(gen);
                if (static_cast<int>(tuple.size()) != symbols)
                    die(kExitInputError, "generator length must equal --symbols");
                flat.insert(flat.end(), tuple.begin(), tuple.end());
            }
            status = g2_gen_perm_cayley(symbols, flat.data(),
                                        static_cast<int32_t>(gens.size()), &g);
        } else if (name == "hypercube") {
            want(1);
            status = g2_gen_hypercube(params[0], &g);
        } else if (name == "complete") {
            want(1);
            status = g2_gen_complete(params[0], &g);
        } else if (name == "cycle") {
            want(1);
            status = g2_gen_cycle(params[0], &g);
        } else if (name == "path") {
            want(1);
            status = g2_gen_path(params[0], &g);
        } else if (name == "slice") {
            want(2);
            status = g2_gen_slice(params[0], params[1], &g);
        } else if (name == "middle-slice") {
            want(1);
            status = g2_gen_middle_slice(params[0], &g);
        } else if (name == "dyck") {
            want(1);
            status = g2_gen_dyck(params[0], &g);
        } else if (name == "tree") {
            want(2);
            status = g2_gen_tree(params[0], params[1], &g);
        } else if (name == "sn-special") {
            want(1);
            status = g2_gen_sn_special(params[0], &g);
        } else if (name == "sn-transpositions") {
            want(1);
            status = g2_gen_sn_transpositions(params[0], &g);
        } else {
            die(kExitInputError,
                "unknown family \"" + name +
                    "\" (families: hypercube complete cycle path slice middle-slice dyck "
                    "tree sn-special sn-transpositions abelian-cayley perm-cayley)");
        }
        if (status != G2_OK) die(exit_code(status), g2_last_error());
        return g;
    }
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string number_or_null(const nlohmann::json& v) {
    if (v.is_null()) return "";
    std::ostringstream ss;
    ss.precision(12);
    ss << v.get<double>();
    return ss.str();
}

std::string render_curvature(const std::string& json, const std::string& format) {
    if (format == "json") return json;
    nlohmann::json j = nlohmann::json::parse(json);
    std::ostringstream out;
    out.precision(12);
    if (format == "csv") {
        out << "vertex,kappa\n";
        int v = 0;
        for (const auto& k : j["per_vertex"])
            out << v++ << "," << number_or_null(k) << "\n";
        return out.str();
    }
    out << "ric            " << j["ric"].get<double>() << "\n";
    out << "upper bound    " << j["upper_bound"].get<double>() << " (2 + T/2)\n";
    out << "witness vertex " << j["witness"]["vertex"].get<int>() << "\n";
    int computed = 0;
    for (const auto& k : j["per_vertex"])
        if (!k.is_null()) ++computed;
    out << "vertices       " << computed << " of " << j["per_vertex"].size() << " computed\n";
    return out.str();
}

std::string render_spectrum(const std::string& json, const std::string& format) {
    if (format == "json") return json;
    nlohmann::json j = nlohmann::json::parse(json);
    std::ostringstream out;
    out.precision(12);
    if (format == "csv") {
        out << "index,eigenvalue\n";
        int i = 0;
        for (const auto& v : j["eigenvalues"]) out << i++ << "," << v.get<double>() << "\n";
        return out.str();
    }
    out << "lambda      " << j["lambda"].get<double>() << "\n";
    out << "components  " << j["components"].get<int>() << "\n";
    out << "eigenvalues " << j["eigenvalues"].size() << " total, max "
        << j["eigenvalues"].back().get<double>() << "\n";
    return out.str();
}

std::string render_cheeger(const std::string& json, const std::string& format) {
    if (format == "json") return json;
    nlohmann::json j = nlohmann::json::parse(json);
    std::ostringstream out;
    out.precision(12);
    if (format == "csv") {
        out << "h,boundary,size,method\n";
        out << j["h"].get<double>() << "," << j["boundary"].get<long long>() << ","
            << j["set"].size() << "," << j["method"].get<std::string>() << "\n";
        out << "set\n";
        for (const auto& v : j["set"]) out << v.get<int>() << "\n";
        return out.str();
    }
    out << "h         " << j["h"].get<double>() << "\n";
    out << "boundary  " << j["boundary"].get<long long>() << "\n";
    out << "|A|       " << j["set"].size() << "\n";
    out << "method    " << j["method"].get<std::string>() << "\n";
    return out.str();
}

std::string render_verify(const std::string& jsonl, const std::string& format) {
    if (format == "json") return jsonl;
    std::istringstream in(jsonl);
    std::string line;
    std::ostringstream out;
    out.precision(12);
    if (format == "csv") {
        out << "name,instance,lhs,rhs,slack,tolerance,pass,required\n";
        while (std::getline(in, line)) {
            nlohmann::json j = nlohmann::json::parse(line);
            if (j.contains("summary")) continue;
            out << csv_escape(j["name"].get<std::string>()) << ","
                << csv_escape(j["instance"].get<std::string>()) << ","
                << j["lhs"].get<double>() << "," << j["rhs"].get<double>() << ","
                << j["slack"].get<double>() << "," << j["tolerance"].get<double>() << ","
                << (j["pass"].get<bool>() ? 1 : 0) << ","
                << (j["required"].get<bool>() ? 1 : 0) << "\n";
        }
        return out.str();
    }
    // text: failures in full, then the summary
    while (std::getline(in, line)) {
        nlohmann::json j = nlohmann::json::parse(line);
        if (j.contains("summary")) {
            const auto& s = j["summary"];
            out << "checks " << s["checks"].get<int>() << ", passed "
                << s["passed"].get<int>() << ", failed " << s["failed"].get<int>()
                << ", informational failures " << s["informational_failed"].get<int>()
                << " (corpus " << s["corpus"].get<std::string>() << ", seed "
                << s["seed"].get<long long>() << ")\n";
        } else if (!j["pass"].get<bool>()) {
            out << (j["required"].get<bool>() ? "FAIL " : "info ") << j["name"].get<std::string>()
                << " on " << j["instance"].get<std::string>() << ": slack "
                << j["slack"].get<double>() << " (tolerance " << j["tolerance"].get<double>()
                << ")\n";
        }
    }
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bakry-Emery graph curvature toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand arguments

    std::string out_path, format = "json";
    int threads = 0;
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    CLI::Option* format_opt =
        app.add_option("--format", format, "output format: json, csv, or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--threads", threads,
                   "worker threads (0 = hardware default, GAMMA2_THREADS respected)");

    // generate
    auto* generate = app.add_subcommand("generate", "emit a family graph as a file");
    GraphSource gen_source;
    gen_source.attach(generate);

    // curvature
    auto* curv = app.add_subcommand("curvature", "per-vertex and global curvature");
    GraphSource curv_source;
    curv_source.attach(curv);
    bool interior = false;
    curv->add_flag("--interior", interior, "restrict to interior vertices (truncated models)");

    // spectrum
    auto* spec = app.add_subcommand("spectrum", "laplacian eigenvalues and the gap");
    GraphSource spec_source;
    spec_source.attach(spec);

    // cheeger
    auto* cheeger = app.add_subcommand("cheeger", "Cheeger constant");
    GraphSource cheeger_source;
    cheeger_source.attach(cheeger);
    bool exact = false, sweep = false;
    int cheeger_cap = 0;
    cheeger->add_flag("--exact", exact, "exhaustive subset enumeration (default)");
    cheeger->add_flag("--sweep", sweep, "Fiedler sweep upper bound");
    cheeger->add_option("--cap-exact-cheeger", cheeger_cap,
                        "vertex cap for the exact method (default 22)");

    // verify
    auto* verify = app.add_subcommand("verify", "run every inequality check on a corpus");
    std::string corpus = "standard";
    std::uint64_t seed = 7;
    double tol = 1.0;
    verify->add_option("--corpus", corpus, "corpus name: standard or quick");
    verify->add_option("--seed", seed, "random seed for the check functions");
    verify->add_option("--tol", tol, "tolerance scale applied to every check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }
    if (threads > 0) g2_set_threads(threads);

    if (*generate) {
        GraphHandle g{gen_source.build()};
        CString text;
        // generate defaults to the edge-list exchange format
        bool as_json = format_opt->count() > 0 && format == "json";
        g2_status status = as_json ? g2_graph_json(g.ptr, &text.ptr)
                                   : g2_graph_edge_list(g.ptr, &text.ptr);
        if (status != G2_OK) die(exit_code(status), g2_last_error());
        emit(out_path, text.str());
        return kExitOk;
    }
    if (*curv) {
        GraphHandle g{curv_source.build()};
        CString json;
        g2_status status = g2_curvature_json(g.ptr, interior ? 1 : 0, &json.ptr);
        if (status != G2_OK) die(exit_code(status), g2_last_error());
        emit(out_path, render_curvature(json.str(), format));
        return kExitOk;
    }
    if (*spec) {
        GraphHandle g{spec_source.build()};
        CString json;
        g2_status status = g2_spectrum_json(g.ptr, &json.ptr);
        if (status != G2_OK) die(exit_code(status), g2_last_error());
        emit(out_path, render_spectrum(json.str(), format));
        return kExitOk;
    }
    if (*cheeger) {
        if (exact && sweep) die(kExitInputError, "choose one of --exact / --sweep");
        GraphHandle g{cheeger_source.build()};
        CString json;
        g2_status status = g2_cheeger_json(g.ptr, sweep ? "sweep" : "exact", cheeger_cap,
                                           &json.ptr);
        if (status != G2_OK) die(exit_code(status), g2_last_error());
        emit(out_path, render_cheeger(json.str(), format));
        return kExitOk;
    }
    if (*verify) {
        CString jsonl;
        g2_status status = g2_verify_jsonl(corpus.c_str(), seed, tol, &jsonl.ptr);
        if (status != G2_OK && status != G2_CHECK_FAILED)
            die(exit_code(status), g2_last_error());
        emit(out_path, render_verify(jsonl.str(), format));
        return exit_code(status);
    }
    return kExitInputError;
}
