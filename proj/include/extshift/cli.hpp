#ifndef EXTSHIFT_CLI_HPP
#define EXTSHIFT_CLI_HPP

#include <extshift/error.hpp>
#include <extshift/field_spec.hpp>
#include <extshift/hypergraph.hpp>
#include <extshift/permutation.hpp>
#include <extshift/shifting.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace extshift::cli {

enum Exit : int { ok = 0, negative = 1, failure = 2, too_small = 3 };

/// A list of faces as read from disk. n = 0 means "infer from the faces".
struct Instance {
    int n = 0;
    std::vector<std::vector<int>> faces;

    bool operator==(const Instance&) const = default;

    int ground_size() const {
        int m = n;
        for (const auto& f : faces) {
            for (int v : f) m = std::max(m, v);
        }
        return m;
    }

    /// The common face size, or -1 when faces differ in size.
    int uniform_size() const {
        if (faces.empty()) return -1;
        for (const auto& f : faces) {
            if (f.size() != faces.front().size()) return -1;
        }
        return static_cast<int>(faces.front().size());
    }
};

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void check_face(const std::vector<int>& face, std::size_t where) {
    const std::string at = "face " + std::to_string(where + 1);
    if (face.empty()) throw parse_error(at + " is empty");
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (face[i] < 1 || face[i] > KSet::max_vertex) {
            throw parse_error(at + ": vertex " + std::to_string(face[i]) + " out of range 1.." + std::to_string(KSet::max_vertex));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (face[j] == face[i]) throw parse_error(at + ": repeated vertex " + std::to_string(face[i]));
        }
    }
}

inline int parse_int(const std::string& tok, const std::string& context) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw parse_error(context + ": expected an integer, got '" + tok + "'");
    }
    if (used != tok.size() || v < -1000000 || v > 1000000) throw parse_error(context + ": bad integer '" + tok + "'");
    return static_cast<int>(v);
}

inline Instance parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("faces") || !j["faces"].is_array()) throw parse_error("json instance needs a 'faces' array");
    Instance inst;
    if (j.contains("n")) {
        if (!j["n"].is_number_integer()) throw parse_error("json 'n' must be an integer");
        inst.n = j["n"].get<int>();
    }
    for (const auto& f : j["faces"]) {
        if (!f.is_array()) throw parse_error("json faces must be arrays of vertices");
        std::vector<int> face;
        for (const auto& v : f) {
            if (!v.is_number_integer()) throw parse_error("json vertices must be integers");
            face.push_back(v.get<int>());
        }
        inst.faces.push_back(std::move(face));
    }
    return inst;
}

inline Instance parse_text(const std::string& text) {
    Instance inst;
    int k = 0;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> toks;
        for (std::string t; words >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        const std::string ctx = "line " + std::to_string(lineno);
        if (toks.front().find('=') != std::string::npos) {
            if (header_seen || !inst.faces.empty()) throw parse_error(ctx + ": header must come first and only once");
            header_seen = true;
            for (const auto& t : toks) {
                auto eq = t.find('=');
                if (eq == std::string::npos) throw parse_error(ctx + ": expected key=value, got '" + t + "'");
                const std::string key = t.substr(0, eq);
                const int value = parse_int(t.substr(eq + 1), ctx);
                if (key == "n") {
                    inst.n = value;
                } else if (key == "k") {
                    k = value;
                } else {
                    throw parse_error(ctx + ": unknown header key '" + key + "'");
                }
            }
            continue;
        }
        std::vector<int> face;
        for (const auto& t : toks) face.push_back(parse_int(t, ctx));
        inst.faces.push_back(std::move(face));
    }
    if (k != 0) {
        for (const auto& f : inst.faces) {
            if (static_cast<int>(f.size()) != k) throw parse_error("face size differs from header k=" + std::to_string(k));
        }
    }
    return inst;
}

} // namespace detail

/// Reads the text format (optional `n=<N> k=<K>` header, one face per line,
/// `#` comments) or the json format {"n": N, "faces": [[...], ...]}.
inline Instance parse_instance(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    Instance inst = first != std::string::npos && text[first] == '{' ? detail::parse_json(text) : detail::parse_text(text);
    if (inst.faces.empty()) throw parse_error("instance has no faces");
    if (inst.n < 0 || inst.n > KSet::max_vertex) throw parse_error("n out of range");
    for (std::size_t i = 0; i < inst.faces.size(); ++i) {
        detail::check_face(inst.faces[i], i);
        if (inst.n > 0) {
            for (int v : inst.faces[i]) {
                if (v > inst.n) throw parse_error("face " + std::to_string(i + 1) + " exceeds n=" + std::to_string(inst.n));
            }
        }
    }
    return inst;
}

inline Instance read_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

inline std::string print_text(const Instance& inst) {
    std::string out;
    const int k = inst.uniform_size();
    if (inst.n > 0 || k > 0) {
        std::string header;
        if (inst.n > 0) header += "n=" + std::to_string(inst.n);
        if (k > 0) header += (header.empty() ? "" : " ") + std::string("k=") + std::to_string(k);
        out += header + "\n";
    }
    for (const auto& f : inst.faces) {
        for (std::size_t i = 0; i < f.size(); ++i) out += (i ? " " : "") + std::to_string(f[i]);
        out += "\n";
    }
    return out;
}

inline nlohmann::json to_json(const Instance& inst) {
    nlohmann::json j;
    if (inst.n > 0) j["n"] = inst.n;
    j["faces"] = inst.faces;
    return j;
}

inline std::string print_json(const Instance& inst) { return to_json(inst).dump() + "\n"; }

inline Instance to_instance(int n, const std::vector<KSet>& faces) {
    Instance inst{n, {}};
    for (const auto& f : faces) inst.faces.push_back(f.vertices());
    return inst;
}

inline std::vector<KSet> to_ksets(const Instance& inst) {
    std::vector<KSet> out;
    for (const auto& f : inst.faces) out.emplace_back(std::span<const int>(f));
    return out;
}

inline UniformHypergraph to_hypergraph(const Instance& inst) {
    if (inst.uniform_size() < 0) throw parse_error("faces of a hypergraph instance must all have the same size");
    return UniformHypergraph(inst.ground_size(), to_ksets(inst));
}

inline SimplicialComplex to_complex(const Instance& inst) { return SimplicialComplex(inst.ground_size(), to_ksets(inst)); }

/// Complete bipartite graph K_{m,n} with sides {1..m} and {m+1..m+n}.
inline Instance gen_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("gen_bipartite needs m, n >= 1");
    if (m + n > KSet::max_vertex) throw std::invalid_argument("gen_bipartite: too many vertices");
    Instance inst{m + n, {}};
    for (int a = 1; a <= m; ++a) {
        for (int b = m + 1; b <= m + n; ++b) inst.faces.push_back({a, b});
    }
    return inst;
}

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

inline std::string digest(const UniformHypergraph& s) { return fnv1a_hex(s.to_string()); }

inline Method parse_method(const std::string& s) {
    if (s == "deterministic") return Method::deterministic;
    if (s == "las-vegas") return Method::las_vegas;
    if (s == "monte-carlo") return Method::monte_carlo;
    throw std::invalid_argument("unknown algorithm '" + s + "' (deterministic, las-vegas, monte-carlo)");
}

inline Engine parse_engine(const std::string& s) {
    if (s == "eager") return Engine::eager;
    if (s == "lazy") return Engine::lazy;
    throw std::invalid_argument("unknown engine '" + s + "' (eager, lazy)");
}

inline std::uint64_t default_seed() {
    const char* env = std::getenv("EXTSHIFT_SEED");
    if (env == nullptr || *env == '\0') return 0;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(env, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || env[used] != '\0') throw std::invalid_argument(std::string("EXTSHIFT_SEED is not an integer: '") + env + "'");
    return v;
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

namespace detail {

template <class T>
std::string element_string(const T& x) {
    if constexpr (std::is_same_v<T, Fp>) {
        return std::to_string(x.value());
    } else {
        return x.to_string();
    }
}

inline nlohmann::json faces_json(const UniformHypergraph& s) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& f : s) a.push_back(f.vertices());
    return a;
}

inline nlohmann::json result_json(const ShiftResult& r, bool timings) {
    nlohmann::json j;
    j["algorithm"] = to_string(r.method);
    j["certified"] = r.certified;
    j["trials"] = r.trials;
    j["short_circuit"] = r.short_circuit;
    j["max_len"] = r.stats.max_length;
    j["max_deg"] = r.stats.max_degree;
    j["multiplications"] = r.stats.multiplications;
    if (timings) {
        j["time_ms"] = r.times.total_ms;
        j["phase_a_ms"] = r.times.sampling_ms;
        j["phase_b_ms"] = r.times.verification_ms;
    }
    return j;
}

inline std::string result_comment(const ShiftResult& r, bool timings) {
    std::ostringstream os;
    os << "# algorithm=" << to_string(r.method) << " certified=" << (r.certified ? "true" : "false") << " trials=" << r.trials
       << " short_circuit=" << (r.short_circuit ? "true" : "false");
    if (timings) {
        os << " time_ms=" << r.times.total_ms << " phase_a_ms=" << r.times.sampling_ms
           << " phase_b_ms=" << r.times.verification_ms;
    }
    return os.str();
}

struct ShiftFlags {
    std::string input;
    std::string field = "q";
    std::string perm = "w0";
    std::string algorithm = "deterministic";
    std::string engine = "lazy";
    std::string output = "text";
    std::size_t samples = 0;
    std::size_t rounds = 1;
    std::uint64_t seed = 0;
    bool complex = false;
    bool timings = false;
};

inline int cmd_shift(const ShiftFlags& f, std::ostream& out) {
    const Instance inst = read_instance(f.input);
    const AnyField field = parse_field_spec(f.field);
    ShiftOptions opt{parse_method(f.algorithm), parse_engine(f.engine), f.samples, f.rounds, f.seed};
    if (f.output != "text" && f.output != "json") throw std::invalid_argument("unknown output format '" + f.output + "'");
    const int n = inst.ground_size();
    const Permutation w = Permutation::parse(f.perm, n);
    if (w.size() < n) throw std::invalid_argument("permutation acts on fewer vertices than the instance uses");
    nlohmann::json j;
    j["field"] = field_name(field);
    j["perm"] = w.to_string();
    if (f.complex) {
        const SimplicialComplex k = to_complex(inst);
        auto res = std::visit([&](const auto& F) { return shift_complex(k, w, F, opt); }, field);
        const Instance shifted = to_instance(w.size(), res.complex.facets());
        if (f.output == "json") {
            j["n"] = w.size();
            j["facets"] = to_json(shifted)["faces"];
            j["levels"] = nlohmann::json::array();
            for (std::size_t i = 0; i < res.levels.size(); ++i) {
                auto lj = result_json(res.levels[i], f.timings);
                lj["dimension"] = res.dimensions[i];
                lj["faces"] = faces_json(res.levels[i].family);
                j["levels"].push_back(std::move(lj));
            }
            out << j.dump() << "\n";
        } else {
            for (std::size_t i = 0; i < res.levels.size(); ++i) {
                out << result_comment(res.levels[i], f.timings) << " dimension=" << res.dimensions[i] << "\n";
            }
            out << print_text(shifted);
        }
        return ok;
    }
    const UniformHypergraph s = UniformHypergraph(std::max(n, w.size()), to_ksets(inst));
    auto res = std::visit([&](const auto& F) { return shift(s, w, F, opt); }, field);
    if (f.output == "json") {
        j.update(result_json(res, f.timings));
        j["n"] = res.family.n();
        j["k"] = res.family.k();
        j["faces"] = faces_json(res.family);
        out << j.dump() << "\n";
    } else {
        out << result_comment(res, f.timings) << "\n" << print_text(to_instance(res.family.n(), res.family.faces()));
    }
    return ok;
}

struct BenchFlags {
    std::string suite = "bipartite";
    int max_side = 3;
    std::vector<std::string> files;
    std::string fields = "q";
    std::string algorithms = "deterministic,las-vegas";
    std::string engines = "eager,lazy";
    std::string csv = "-";
    double timeout_s = 1800;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
};

inline constexpr const char* csv_header =
    "instance,field,algorithm,engine,time_ms,phase_a_ms,phase_b_ms,trials,short_circuit,max_len,max_deg,result_digest";

inline std::string fmt_ms(double ms) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << ms;
    return os.str();
}

inline std::string bench_row(const UniformHypergraph& s, const std::string& field_spec, Method method, Engine engine,
                             std::size_t samples, std::uint64_t seed) {
    const AnyField field = parse_field_spec(field_spec);
    const Permutation w0 = Permutation::longest_element(s.n());
    ShiftOptions opt{method, engine, samples, 1, seed};
    extshift::detail::Stopwatch clock;
    auto res = std::visit([&](const auto& F) { return shift(s, w0, F, opt); }, field);
    const double wall = clock.elapsed_ms();
    std::ostringstream os;
    os << fmt_ms(wall) << "," << fmt_ms(res.times.sampling_ms) << "," << fmt_ms(res.times.verification_ms) << "," << res.trials
       << "," << (res.short_circuit ? 1 : 0) << "," << res.stats.max_length << "," << res.stats.max_degree << ","
       << digest(res.family);
    return os.str();
}

/// Runs one bench row in a child process and returns its metric columns,
/// "oot" columns on timeout or "error" columns on failure.
inline std::string run_isolated(const std::function<std::string()>& job, double timeout_s) {
    const std::string oot = "oot,oot,oot,oot,oot,oot,oot,oot";
    const std::string error = "error,error,error,error,error,error,error,error";
    int fds[2];
    if (pipe(fds) != 0) throw std::runtime_error("pipe failed");
    std::fflush(nullptr);
    const pid_t pid = fork();
    if (pid < 0) throw std::runtime_error("fork failed");
    if (pid == 0) {
        close(fds[0]);
        std::string line;
        try {
            line = job();
        } catch (const std::exception&) {
            line = error;
        }
        const char* p = line.data();
        std::size_t left = line.size();
        while (left > 0) {
            const ssize_t w = write(fds[1], p, left);
            if (w <= 0) break;
            p += w;
            left -= static_cast<std::size_t>(w);
        }
        close(fds[1]);
        _exit(0);
    }
    close(fds[1]);
    std::string line;
    const auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(timeout_s);
    bool timed_out = false;
    while (true) {
        const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now()).count();
        if (left <= 0) {
            timed_out = true;
            break;
        }
        pollfd pfd{fds[0], POLLIN, 0};
        const int r = poll(&pfd, 1, static_cast<int>(std::min<long long>(left, 1 << 30)));
        if (r == 0) continue;
        if (r < 0) {
            if (errno == EINTR) continue;
            break;
        }
        char buf[512];
        const ssize_t got = read(fds[0], buf, sizeof buf);
        if (got <= 0) break;
        line.append(buf, static_cast<std::size_t>(got));
    }
    close(fds[0]);
    if (timed_out) kill(pid, SIGKILL);
    int status = 0;
    waitpid(pid, &status, 0);
    if (timed_out) return oot;
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0 || line.empty()) return error;
    return line;
}

inline int cmd_bench(const BenchFlags& f, std::ostream& out) {
    std::vector<std::pair<std::string, UniformHypergraph>> instances;
    if (f.suite == "bipartite") {
        if (f.max_side < 1) throw std::invalid_argument("--max-side must be at least 1");
        for (int m = 1; m <= f.max_side; ++m) {
            for (int n = m; n <= f.max_side; ++n) {
                instances.emplace_back("K_" + std::to_string(m) + "_" + std::to_string(n), to_hypergraph(gen_bipartite(m, n)));
            }
        }
    } else if (f.suite == "files") {
        if (f.files.empty()) throw std::invalid_argument("--suite files needs at least one --file");
        for (const auto& path : f.files) {
            instances.emplace_back(std::filesystem::path(path).stem().string(), to_hypergraph(read_instance(path)));
        }
    } else {
        throw std::invalid_argument("unknown suite '" + f.suite + "' (bipartite, files)");
    }
    const auto fields = split_list(f.fields);
    std::vector<Method> methods;
    for (const auto& a : split_list(f.algorithms)) methods.push_back(parse_method(a));
    std::vector<Engine> engines;
    for (const auto& e : split_list(f.engines)) engines.push_back(parse_engine(e));
    for (const auto& spec : fields) {
        // image tables are built here so that forked rows do not pay for them
        const std::uint64_t ch = std::visit([](const auto& F) -> std::uint64_t { return F.characteristic(); }, parse_field_spec(spec));
        if (ch != 0 && ch < extshift::detail::image_min_order) (void)extshift::detail::zech_arith(ch);
    }
    if (fields.empty() || methods.empty() || engines.empty()) throw std::invalid_argument("empty field, algorithm or engine list");
    if (!(f.timeout_s > 0)) throw std::invalid_argument("--timeout must be positive");

    std::ofstream file;
    std::ostream* sink = &out;
    if (f.csv != "-") {
        file.open(f.csv);
        if (!file) throw std::runtime_error("cannot write '" + f.csv + "'");
        sink = &file;
    }
    *sink << csv_header << "\n";
    sink->flush();
    for (const auto& [id, s] : instances) {
        for (const auto& spec : fields) {
            for (Method m : methods) {
                for (Engine e : engines) {
                    auto cols = run_isolated([&] { return bench_row(s, spec, m, e, f.samples, f.seed); }, f.timeout_s);
                    *sink << id << "," << spec << "," << to_string(m) << "," << to_string(e) << "," << cols << "\n";
                    sink->flush();
                }
            }
        }
    }
    if (!*sink) throw std::runtime_error("writing the csv failed");
    return ok;
}

} // namespace detail

/// Entry point of the command-line tool. Exit codes: 0 success or "true",
/// 1 "false", 2 usage or input errors, 3 when a Las Vegas run finds no
/// certified sample.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exterior algebraic shifting of uniform hypergraphs and simplicial complexes", "extshift"};
    app.require_subcommand(1);
    std::uint64_t seed_default = 0;
    try {
        seed_default = default_seed();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return failure;
    }

    std::string input;
    auto* is_shifted_cmd = app.add_subcommand("is-shifted", "Decide whether a uniform hypergraph is shifted (exit 0 / 1)");
    is_shifted_cmd->add_option("input", input, "Instance file")->required();

    detail::ShiftFlags sf;
    sf.seed = seed_default;
    auto* shift_cmd = app.add_subcommand("shift", "Compute the shift of a hypergraph or complex by R(w)");
    shift_cmd->add_option("input", sf.input, "Instance file")->required();
    shift_cmd->add_option("--field", sf.field, "q, <p> or <p>^<d>")->capture_default_str();
    shift_cmd->add_option("--perm", sf.perm, "One-line notation, 'w0' or 'id'")->capture_default_str();
    shift_cmd->add_option("--algorithm", sf.algorithm, "deterministic, las-vegas or monte-carlo")->capture_default_str();
    shift_cmd->add_option("--samples", sf.samples, "Las Vegas samples per round (0: 1 over q, 100 otherwise)")->capture_default_str();
    shift_cmd->add_option("--rounds", sf.rounds, "Las Vegas rounds")->capture_default_str();
    shift_cmd->add_option("--engine", sf.engine, "eager or lazy")->capture_default_str();
    shift_cmd->add_option("--seed", sf.seed, "Random seed (default from EXTSHIFT_SEED, else 0)");
    shift_cmd->add_option("--output", sf.output, "text or json")->capture_default_str();
    shift_cmd->add_flag("--complex", sf.complex, "Treat the faces as facets of a simplicial complex");
    shift_cmd->add_flag("--timings", sf.timings, "Include wall-clock timings (makes output run-dependent)");

    std::string claimed, vperm = "w0", vfield = "q", vengine = "lazy";
    auto* verify_cmd = app.add_subcommand("verify", "Check a claimed shift (exit 0 if equal, 1 if not)");
    verify_cmd->add_option("input", input, "Instance file")->required();
    verify_cmd->add_option("--claimed", claimed, "Instance file with the claimed shift")->required();
    verify_cmd->add_option("--perm", vperm, "One-line notation, 'w0' or 'id'")->capture_default_str();
    verify_cmd->add_option("--field", vfield, "q, <p> or <p>^<d>")->capture_default_str();
    verify_cmd->add_option("--engine", vengine, "eager or lazy")->capture_default_str();

    std::vector<int> transposition;
    bool until_shifted = false;
    std::string coutput = "text";
    auto* comb_cmd = app.add_subcommand("comb-shift", "Combinatorial shift along a transposition, or until shifted");
    comb_cmd->add_option("input", input, "Instance file")->required();
    auto* topt = comb_cmd->add_option("--transposition", transposition, "Two vertices a b")->expected(2);
    auto* uopt = comb_cmd->add_flag("--until-shifted", until_shifted, "Apply all transpositions (i j), i < j, until stable");
    topt->excludes(uopt);
    comb_cmd->add_option("--output", coutput, "text or json")->capture_default_str();

    detail::BenchFlags bf;
    bf.seed = seed_default;
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark full shifts; one CSV row per instance, field, algorithm and engine");
    bench_cmd->add_option("--suite", bf.suite, "bipartite or files")->capture_default_str();
    bench_cmd->add_option("--max-side", bf.max_side, "Bipartite suite: K_{m,n} for 1 <= m <= n <= this")->capture_default_str();
    bench_cmd->add_option("--file", bf.files, "Instance files for --suite files");
    bench_cmd->add_option("--fields", bf.fields, "Comma-separated field specs")->capture_default_str();
    bench_cmd->add_option("--algorithms", bf.algorithms, "Comma-separated algorithms")->capture_default_str();
    bench_cmd->add_option("--engines", bf.engines, "Comma-separated engines")->capture_default_str();
    bench_cmd->add_option("--csv", bf.csv, "Output path, '-' for stdout")->capture_default_str();
    bench_cmd->add_option("--timeout", bf.timeout_s, "Per-row wall-clock limit in seconds")->capture_default_str();
    bench_cmd->add_option("--samples", bf.samples, "Las Vegas samples (0: default)")->capture_default_str();
    bench_cmd->add_option("--seed", bf.seed, "Random seed (default from EXTSHIFT_SEED, else 0)");

    std::string gperm = "w0", gfield = "2", gengine = "lazy";
    auto* search_cmd = app.add_subcommand("search-genericity", "Count the assignments of a finite field that realize the shift by R(w)");
    search_cmd->add_option("input", input, "Instance file")->required();
    search_cmd->add_option("--perm", gperm, "One-line notation, 'w0' or 'id'")->capture_default_str();
    search_cmd->add_option("--field", gfield, "Finite field: <p> or <p>^<d>")->capture_default_str();
    search_cmd->add_option("--engine", gengine, "eager or lazy")->capture_default_str();

    int bm = 0, bn = 0;
    std::string boutput = "text";
    auto* gen_cmd = app.add_subcommand(
        "gen-bipartite", "Print K_{m,n} with sides {1..m} and {m+1..m+n} (m+n vertices in total)");
    gen_cmd->add_option("m", bm, "Size of the first side")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("n", bn, "Size of the second side")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--output", boutput, "text or json")->capture_default_str();

    std::vector<std::string> argv_store;
    argv_store.emplace_back("extshift");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : failure;
    }

    try {
        if (is_shifted_cmd->parsed()) {
            const bool yes = is_shifted(to_hypergraph(read_instance(input)));
            out << (yes ? "true" : "false") << "\n";
            return yes ? ok : negative;
        }
        if (shift_cmd->parsed()) return detail::cmd_shift(sf, out);
        if (verify_cmd->parsed()) {
            const Instance inst = read_instance(input);
            const Instance claim = read_instance(claimed);
            const AnyField field = parse_field_spec(vfield);
            const int n = std::max(inst.ground_size(), claim.ground_size());
            const Permutation w = Permutation::parse(vperm, n);
            if (w.size() < n) throw std::invalid_argument("permutation acts on fewer vertices than the instances use");
            const UniformHypergraph s(w.size(), to_ksets(inst));
            const UniformHypergraph c = to_hypergraph(claim);
            const Engine engine = parse_engine(vengine);
            const bool yes = std::visit([&](const auto& F) { return verify_claimed(s, w, c, prime_subfield(F), engine); }, field);
            out << (yes ? "true" : "false") << "\n";
            return yes ? ok : negative;
        }
        if (comb_cmd->parsed()) {
            UniformHypergraph s = to_hypergraph(read_instance(input));
            if (until_shifted) {
                for (bool changed = true; changed;) {
                    changed = false;
                    for (int i = 1; i <= s.n(); ++i) {
                        for (int j = i + 1; j <= s.n(); ++j) {
                            auto next = combinatorial_shift(s, i, j);
                            if (!(next == s)) {
                                s = std::move(next);
                                changed = true;
                            }
                        }
                    }
                }
            } else {
                if (transposition.size() != 2) throw std::invalid_argument("comb-shift needs --transposition a b or --until-shifted");
                s = combinatorial_shift(s, transposition[0], transposition[1]);
            }
            const Instance res = to_instance(s.n(), s.faces());
            if (coutput == "json") {
                out << print_json(res);
            } else if (coutput == "text") {
                out << print_text(res);
            } else {
                throw std::invalid_argument("unknown output format '" + coutput + "'");
            }
            return ok;
        }
        if (bench_cmd->parsed()) return detail::cmd_bench(bf, out);
        if (search_cmd->parsed()) {
            const Instance inst = read_instance(input);
            const AnyField field = parse_field_spec(gfield);
            const Permutation w = Permutation::parse(gperm, inst.ground_size());
            const UniformHypergraph s(std::max(w.size(), inst.ground_size()), to_ksets(inst));
            const Engine engine = parse_engine(gengine);
            return std::visit(
                [&](const auto& F) -> int {
                    using FieldT = std::decay_t<decltype(F)>;
                    if constexpr (std::is_same_v<FieldT, RationalField>) {
                        throw std::invalid_argument("search-genericity needs a finite field");
                    } else {
                        auto res = search_genericity(s, w, F, engine);
                        out << "shift " << res.target.to_string() << "\n";
                        out << "assignments " << res.assignments << "\n";
                        out << "verifying " << res.verifying << "\n";
                        if (res.witness) {
                            out << "witness";
                            for (const auto& [ij, value] : *res.witness) {
                                out << " x" << ij.first << "," << ij.second << "=" << detail::element_string(value);
                            }
                            out << "\n";
                        }
                        return res.verifying > 0 ? ok : negative;
                    }
                },
                field);
        }
        if (gen_cmd->parsed()) {
            const Instance inst = gen_bipartite(bm, bn);
            if (boutput == "json") {
                out << print_json(inst);
            } else if (boutput == "text") {
                out << print_text(inst);
            } else {
                throw std::invalid_argument("unknown output format '" + boutput + "'");
            }
            return ok;
        }
    } catch (const field_too_small& e) {
        err << "error: " << e.what() << "\n";
        return too_small;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return failure;
    }
    return failure;
}

} // namespace extshift::cli

#endif
