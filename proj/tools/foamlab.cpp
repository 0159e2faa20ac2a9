// foamlab command-line front end.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "foamlab/corpus.hpp"
#include "foamlab/errors.hpp"
#include "foamlab/eval.hpp"
#include "foamlab/json_io.hpp"
#include "foamlab/link.hpp"
#include "foamlab/selftest.hpp"
#include "foamlab/statespace.hpp"

using namespace foamlab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// first word that is not part of a comment
std::string header_word(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream words(line);
        std::string w;
        if (words >> w) return w;
    }
    return "";
}

// A closed foam from a foam file or a movie file.
Foam load_closed_foam(const std::string& path) {
    std::string text = read_file(path);
    if (header_word(text) == "movie") {
        Movie m = parse_movie(text, fs::path(path).parent_path().string());
        if (!m.bottom.empty() || !m.top().empty()) throw DomainError("movie " + path + " is not closed");
        return movie_to_foam(m);
    }
    return parse_foam(text);
}

// --theory / --N on top of the file's own tag
void retag(Foam& f, const std::string& theory, int N) {
    if (theory.empty()) {
        if (N > 0 && f.theory.kind == Theory::GlN) f.theory.N = N;
        return;
    }
    if (theory == "sl3u") f.theory = sl3u();
    else if (theory == "sl3o") f.theory = sl3o();
    else if (theory == "gl") f.theory = gl(N > 0 ? N : (f.theory.kind == Theory::GlN ? f.theory.N : 3));
    else throw CLI::ValidationError("--theory", "expected sl3u, sl3o or gl");
    if (f.theory.kind == Theory::GlN && f.theory.N < 1) throw CLI::ValidationError("--N", "N must be positive");
}

struct Output {
    bool as_json = false;
    std::ostringstream text;
    json doc = json::object();
    void flush() const {
        if (as_json) std::cout << doc.dump(2) << "\n";
        else std::cout << text.str();
    }
};

// ------------------------------------------------------------ commands

void cmd_eval(Output& out, const std::string& path, const std::string& theory, int N) {
    Foam f = load_closed_foam(path);
    retag(f, theory, N);
    out.doc["theory"] = theory_name(f.theory);
    if (f.theory.kind == Theory::Sl3Oriented) {
        std::int64_t v = eval_oriented_sl3(f);
        out.doc["value"] = v;
        out.text << v << "\n";
        return;
    }
    SymPoly p = f.theory.kind == Theory::GlN ? eval_gln(f) : eval_sl3_unoriented(f);
    auto deg = foam_degree(f);
    out.doc["value"] = poly_to_json(p);
    out.doc["text"] = p.to_string();
    out.doc["degree"] = deg ? json(*deg) : json(nullptr);
    out.text << p.to_string() << "\n";
    out.text << "degree " << (deg ? std::to_string(*deg) : std::string("undefined")) << "\n";
}

void cmd_colorings(Output& out, const std::string& path, const std::string& theory, int N, bool list) {
    Foam f = load_closed_foam(path);
    retag(f, theory, N);
    json items = json::array();
    std::int64_t count = 0;
    if (f.theory.kind == Theory::GlN) {
        for_each_gln_coloring(f, f.theory.N, [&](const GlColoring& c) {
            ++count;
            if (list) {
                json item = json::object();
                for (const auto& [id, m] : c) {
                    json colors = json::array();
                    for (int k = 0; k < f.theory.N; ++k)
                        if (m >> k & 1u) colors.push_back(k + 1);
                    item[std::to_string(id)] = colors;
                }
                items.push_back(item);
            }
            return true;
        });
    } else {
        for_each_sl3_coloring(f, [&](const Sl3Coloring& c) {
            ++count;
            if (list) {
                json item = json::object();
                for (const auto& [id, x] : c) item[std::to_string(id)] = x;
                items.push_back(item);
            }
            return true;
        });
    }
    out.doc["count"] = count;
    out.text << count << "\n";
    if (list) {
        out.doc["colorings"] = items;
        for (const auto& item : items) out.text << item.dump() << "\n";
    }
}

void cmd_web(Output& out, const std::string& action, const std::string& path) {
    Web w = load_web(path);
    out.doc["action"] = action;
    if (action == "tait") {
        std::int64_t t = count_tait_colorings_web(w);
        out.doc["t"] = t;
        out.text << t << "\n";
    } else if (action == "reduce") {
        ReductionOutcome r = reduce(w);
        out.doc["reduced"] = r.reduced;
        out.doc["reason"] = r.reason;
        if (!r.reduced) {
            out.text << "irreducible\n";
            return;
        }
        out.doc["t"] = r.t;
        out.doc["grk"] = laurent_to_json(r.grk);
        if (!r.reason.empty()) out.text << "zero (" << r.reason << ")\n";
        out.text << "t " << r.t << "\ngrk " << r.grk.to_string() << "\n";
    } else if (action == "kuperberg") {
        LaurentQ p = kuperberg_poly(w);
        out.doc["value"] = laurent_to_json(p);
        out.text << p.to_string() << "\n";
    } else if (action == "regions") {
        json rs = json::array();
        for (const auto& r : regions(w)) {
            json darts = json::array();
            for (const auto& d : r.darts) darts.push_back({d.edge, d.end});
            rs.push_back({{"sides", r.sides}, {"darts", darts}, {"circle", r.circle},
                          {"touches_boundary", r.touches_boundary}});
            out.text << r.sides;
            if (r.circle >= 0) out.text << " (circle " << r.circle << ")";
            else
                for (const auto& d : r.darts) out.text << " " << d.edge << ":" << d.end;
            out.text << "\n";
        }
        out.doc["regions"] = rs;
    } else if (action == "bridges") {
        auto b = find_bridges(w);
        out.doc["bridges"] = b;
        for (int e : b) out.text << e << "\n";
        if (b.empty()) out.text << "none\n";
    } else {
        throw CLI::ValidationError("web", "unknown action " + action);
    }
}

void cmd_link(Output& out, const std::string& pd) {
    LinkDiagram d = parse_pd(pd);
    validate_pd(d);
    LaurentQ p = link_invariant(d);
    out.doc["pd"] = format_pd(d);
    out.doc["value"] = laurent_to_json(p);
    out.text << p.to_string() << "\n";
}

std::vector<Movie> load_generators(const std::string& dir) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".movie") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw DomainError("no .movie files in " + dir);
    std::vector<Movie> gens;
    for (const auto& p : files) gens.push_back(load_movie(p.string()));
    return gens;
}

void cmd_statespace(Output& out, const std::string& path, const std::string& gens_dir, const std::string& theory) {
    Web w = load_web(path);
    GramTheory th = gram_theory_from_name(theory);
    bool from_reduction = gens_dir.empty();
    std::vector<Movie> gens = from_reduction ? generators_for_reducible(w) : load_generators(gens_dir);
    if (th == GramTheory::Z && !w.is_oriented()) throw DomainError("the z theory needs an oriented web");
    GramReport r = gram_matrix(w, gens, th);
    r.lower_bound = !from_reduction;
    out.doc["theory"] = gram_theory_name(th);
    out.doc["generators"] = gens.size();
    out.doc["degrees"] = r.degrees;
    out.doc["hashes"] = r.hashes;
    out.doc["matrix"] = r.matrix;
    json ranks = json::object();
    for (const auto& [d, k] : r.ranks) ranks[std::to_string(d)] = k;
    out.doc["ranks"] = ranks;
    out.doc["graded_dimension"] = laurent_to_json(r.graded_dimension);
    out.doc["lower_bound"] = r.lower_bound;
    if (th != GramTheory::F2) out.doc["free"] = r.free;
    out.text << "generators " << gens.size() << "\n";
    out.text << "graded dimension " << r.graded_dimension.to_string() << (r.lower_bound ? " (lower bound)" : "")
             << "\n";
    if (th != GramTheory::F2) out.text << (r.free ? "free" : "not free") << "\n";
    if (th == GramTheory::F2) {
        std::int64_t t = count_tait_colorings_web(w);
        out.doc["t"] = t;
        out.text << "t " << t << "\n";
    }
}

void cmd_homdim(Output& out, const std::string& a, const std::string& b) {
    LaurentQ p = hom_space_dim(load_web(a), load_web(b));
    out.doc["value"] = laurent_to_json(p);
    out.text << p.to_string() << "\n";
}

void cmd_corpus(Output& out, const std::string& kind, int count, std::uint64_t seed) {
    Rng rng(seed);
    json items = json::array();
    for (int i = 0; i < count; ++i) {
        std::string s;
        if (kind == "webs-reducible") s = serialize_web(random_reducible_web(rng, 12));
        else if (kind == "webs-random") s = serialize_web(random_web(rng, 12));
        else if (kind == "foams-gln") s = serialize_foam(random_gln_foam(rng, 8, 5, 4));
        else if (kind == "movies") s = serialize_movie(random_closed_movie(rng, sl3u(), 6, 2));
        else throw CLI::ValidationError("corpus", "kind must be webs-reducible, webs-random, foams-gln or movies");
        items.push_back(s);
        out.text << "# item " << i << "\n" << s;
        if (!s.empty() && s.back() != '\n') out.text << "\n";
    }
    out.doc["kind"] = kind;
    out.doc["seed"] = seed;
    out.doc["items"] = items;
}

int cmd_selftest(Output& out) {
    int failed = 0;
    json rows = json::array();
    for (const auto& r : run_acceptance()) {
        failed += !r.pass;
        rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds},
                        {"detail", r.detail}});
        out.text << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name;
        if (!r.detail.empty()) out.text << "  " << r.detail;
        out.text << "\n";
    }
    out.doc["criteria"] = rows;
    out.doc["failed"] = failed;
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"foamlab: foam evaluation, webs and state spaces"};
    app.require_subcommand(1);
    Output out;
    std::string theory, path, path2, gens_dir, pd, action, kind;
    int N = 0, count = 10;
    std::uint64_t seed = 1;
    bool list = false;

    auto* eval = app.add_subcommand("eval-foam", "evaluate a closed foam or closed movie");
    eval->add_option("file", path, "foam or movie file")->required();
    eval->add_option("--theory", theory, "sl3u, sl3o or gl");
    eval->add_option("--N", N, "GL(N) rank");

    auto* col = app.add_subcommand("colorings", "count (and list) foam colorings");
    col->add_option("file", path)->required();
    col->add_option("--theory", theory);
    col->add_option("--N", N);
    col->add_flag("--list", list, "print every coloring");

    auto* web = app.add_subcommand("web", "web structure and invariants");
    web->add_option("action", action, "tait, reduce, kuperberg, regions or bridges")
        ->required()
        ->check(CLI::IsMember({"tait", "reduce", "kuperberg", "regions", "bridges"}));
    web->add_option("file", path)->required();

    auto* link = app.add_subcommand("link", "link diagrams");
    auto* inv = link->add_subcommand("invariant", "SL(3) invariant of a PD code");
    inv->add_option("--pd", pd, "PD code such as \"X[1,4,2,3]+ X[...]\" or \"O\"")->required();
    link->require_subcommand(1);

    auto* ss = app.add_subcommand("statespace", "Gram matrix and graded dimension of a web");
    ss->add_option("file", path)->required();
    ss->add_option("--gens", gens_dir, "directory of generator movies");
    ss->add_option("--theory", theory, "f2 or z")->check(CLI::IsMember({"f2", "z", "gl"}));

    auto* hom = app.add_subcommand("homdim", "graded dimension of a hom space between two webs");
    hom->add_option("web1", path)->required();
    hom->add_option("web2", path2)->required();

    auto* corpus = app.add_subcommand("corpus", "seeded random inputs");
    corpus->add_option("kind", kind, "webs-reducible, webs-random, foams-gln or movies")
        ->required()
        ->check(CLI::IsMember({"webs-reducible", "webs-random", "foams-gln", "movies"}));
    corpus->add_option("--count", count)->check(CLI::NonNegativeNumber);
    corpus->add_option("--seed", seed);

    auto* self = app.add_subcommand("selftest", "run the acceptance checks");

    app.add_flag("--json", out.as_json, "JSON output");
    for (auto* sub : {eval, col, web, inv, ss, hom, corpus, self}) sub->add_flag("--json", out.as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    out.doc["schema"] = 1;
    int status = 0;
    try {
        if (*eval) {
            out.doc["command"] = "eval-foam";
            cmd_eval(out, path, theory, N);
        } else if (*col) {
            out.doc["command"] = "colorings";
            cmd_colorings(out, path, theory, N, list);
        } else if (*web) {
            out.doc["command"] = "web";
            cmd_web(out, action, path);
        } else if (*inv) {
            out.doc["command"] = "link invariant";
            cmd_link(out, pd);
        } else if (*ss) {
            out.doc["command"] = "statespace";
            cmd_statespace(out, path, gens_dir, theory.empty() ? "f2" : theory);
        } else if (*hom) {
            out.doc["command"] = "homdim";
            cmd_homdim(out, path, path2);
        } else if (*corpus) {
            out.doc["command"] = "corpus";
            cmd_corpus(out, kind, count, seed);
        } else if (*self) {
            out.doc["command"] = "selftest";
            status = cmd_selftest(out);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    out.flush();
    return status;
}
