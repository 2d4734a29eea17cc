// Command-line front end: generate point sets, evaluate discrepancies, run
// the verification suites, and emit plot-ready CSV tables.
//
//   l2disc gen <hammersley|lattice|fibonacci|grid|random> key=value... [--out FILE]
//   l2disc disc <file> [--kinds standard,extreme,periodic] [--method pair_sum] ...
//   l2disc verify <suite> [key=value...] [--seed S] [--tol-rel X] [--tol-abs X]
//   l2disc table <hammersley|fibonacci_slope|grid_ratio> [key=value...]
//
// All randomized commands require an explicit --seed (or seed=) so output is
// reproducible. CSV goes to standard output with 17-significant-digit
// values; `verify` exits nonzero iff a non-expected-fail record fails.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "l2disc/closedform.hpp"
#include "l2disc/discrepancy.hpp"
#include "l2disc/errors.hpp"
#include "l2disc/numtheory.hpp"
#include "l2disc/pointset.hpp"
#include "l2disc/verify.hpp"

namespace {

using namespace l2disc;

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> options; // flags and key=value merged
};

Args parse_args(int argc, char** argv, int start) {
    Args a;
    for (int i = start; i < argc; ++i) {
        std::string tok = argv[i];
        if (tok.rfind("--", 0) == 0) {
            std::string key = tok.substr(2);
            if (auto eq = key.find('='); eq != std::string::npos) {
                a.options[key.substr(0, eq)] = key.substr(eq + 1);
            } else if (i + 1 < argc) {
                a.options[key] = argv[++i];
            } else {
                throw BadParams("flag --" + key + " needs a value");
            }
        } else if (auto eq = tok.find('='); eq != std::string::npos) {
            a.options[tok.substr(0, eq)] = tok.substr(eq + 1);
        } else {
            a.positional.push_back(tok);
        }
    }
    return a;
}

std::string get(const Args& a, const std::string& key, const std::string& fallback) {
    auto it = a.options.find(key);
    return it == a.options.end() ? fallback : it->second;
}

long long get_int(const Args& a, const std::string& key, long long fallback) {
    auto it = a.options.find(key);
    if (it == a.options.end()) return fallback;
    return std::stoll(it->second);
}

double get_real(const Args& a, const std::string& key, double fallback) {
    auto it = a.options.find(key);
    if (it == a.options.end()) return fallback;
    return std::stod(it->second);
}

std::uint64_t require_seed(const Args& a) {
    auto it = a.options.find("seed");
    if (it == a.options.end())
        throw BadParams("this command is randomized; pass an explicit --seed");
    return std::stoull(it->second);
}

struct Range {
    long long lo, hi;
};

// "4" or "0..12"
Range get_range(const Args& a, const std::string& key, Range fallback) {
    auto it = a.options.find(key);
    if (it == a.options.end()) return fallback;
    const std::string& s = it->second;
    if (auto dots = s.find(".."); dots != std::string::npos)
        return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
    const long long v = std::stoll(s);
    return {v, v};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

void apply_threads(const Args& a) {
    if (auto it = a.options.find("threads"); it != a.options.end()) {
#ifdef _WIN32
        _putenv_s("L2DISC_THREADS", it->second.c_str());
#else
        setenv("L2DISC_THREADS", it->second.c_str(), 1);
#endif
    }
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int cmd_gen(const Args& a) {
    if (a.positional.empty()) throw BadParams("gen needs a point set kind");
    const std::string& kind = a.positional[0];
    std::optional<PointSet> ps;
    if (kind == "hammersley") {
        ps = hammersley(int(get_int(a, "m", -1)));
    } else if (kind == "lattice") {
        ps = rational_lattice(get_int(a, "p", -1), get_int(a, "q", -1));
    } else if (kind == "fibonacci") {
        ps = fibonacci_lattice(int(get_int(a, "n", -1)));
    } else if (kind == "grid") {
        ps = regular_grid(int(get_int(a, "m", -1)), int(get_int(a, "d", 2)));
    } else if (kind == "random") {
        const auto n = get_int(a, "N", -1);
        if (n < 1) throw BadParams("gen random needs N=<count>");
        ps = random_pointset(std::size_t(n), int(get_int(a, "d", 2)), require_seed(a));
    } else {
        throw BadParams("unknown point set kind: " + kind);
    }
    const std::string out = get(a, "out", "-");
    if (out == "-")
        write_pointset(std::cout, *ps);
    else
        write_pointset_file(out, *ps);
    return 0;
}

int cmd_disc(const Args& a) {
    if (a.positional.empty()) throw BadParams("disc needs a point set file");
    std::optional<PointSet> ps;
    if (a.positional[0] == "-")
        ps = read_pointset(std::cin);
    else
        ps = read_pointset_file(a.positional[0]);

    const std::string method = get(a, "method", "pair_sum");
    const Summation mode =
        get(a, "summation", "compensated") == "naive" ? Summation::naive
                                                      : Summation::compensated;
    const std::string default_kinds = method == "spectral"  ? "periodic"
                                      : method == "one_dim" ? "extreme,periodic"
                                                            : "standard,extreme,periodic";
    std::vector<std::string> kinds = split(get(a, "kinds", default_kinds), ',');

    DiscrepancyReport report;
    report.n_points = ps->size();
    report.dim = ps->dim();
    report.summation = mode;

    if (method == "spectral") {
        report.method = Method::spectral_truncated;
        const int K = int(get_int(a, "K", 64));
        report.truncation_k = K;
        double tail = 0.0;
        for (const auto& k : kinds) {
            if (k != "periodic")
                throw MethodUnsupportedForInput("spectral evaluation is periodic-only");
            const SpectralResult r = diaphony_truncated(*ps, K);
            report.periodic_sq = r.value;
            tail = r.tail_bound;
        }
        std::cout << "kind,N,d,method,value_sq,value,tail_bound\n";
        if (report.periodic_sq)
            std::cout << "periodic," << report.n_points << ',' << report.dim << ','
                      << to_string(report.method) << ',' << num(*report.periodic_sq) << ','
                      << num(std::sqrt(*report.periodic_sq)) << ',' << num(tail) << "\n";
        return 0;
    }

    for (const auto& k : kinds) {
        if (method == "pair_sum") {
            report.method = Method::pair_sum;
            if (k == "standard")
                report.standard_sq = l2_standard_sq(*ps, mode);
            else if (k == "extreme")
                report.extreme_sq = l2_extreme_sq(*ps, mode);
            else if (k == "periodic")
                report.periodic_sq = l2_periodic_sq(*ps, mode);
            else
                throw BadParams("unknown discrepancy kind: " + k);
        } else if (method == "cell_exact") {
            report.method = Method::cell_exact;
            if (k == "standard")
                report.standard_sq = cell_exact_sq(*ps, Kind::standard);
            else if (k == "extreme")
                report.extreme_sq = cell_exact_sq(*ps, Kind::extreme);
            else if (k == "periodic")
                report.periodic_sq = cell_exact_sq(*ps, Kind::periodic);
            else
                throw BadParams("unknown discrepancy kind: " + k);
        } else if (method == "one_dim") {
            report.method = Method::one_dim_ordered;
            if (k == "extreme")
                report.extreme_sq = l2_extreme_sq_1d(*ps);
            else if (k == "periodic")
                report.periodic_sq = l2_periodic_sq_1d(*ps);
            else
                throw MethodUnsupportedForInput("one_dim supports extreme and periodic only");
        } else {
            throw BadParams("unknown method: " + method);
        }
    }
    report.validate();

    std::cout << "kind,N,d,method,value_sq,value\n";
    auto row = [&](const char* kind, const std::optional<double>& v) {
        if (!v) return;
        std::cout << kind << ',' << report.n_points << ',' << report.dim << ','
                  << to_string(report.method) << ',' << num(*v) << ',' << num(std::sqrt(*v))
                  << "\n";
    };
    // rows follow the order requested on the command line
    for (const auto& k : kinds) {
        if (k == "standard") row("standard", report.standard_sq);
        if (k == "extreme") row("extreme", report.extreme_sq);
        if (k == "periodic") row("periodic", report.periodic_sq);
    }
    return 0;
}

int cmd_verify(const Args& a) {
    if (a.positional.empty()) throw UnknownSuite("verify needs a suite name");
    const std::string& suite = a.positional[0];
    const double tol_rel = get_real(a, "tol-rel", 1e-9);
    std::vector<VerificationRecord> records;

    if (suite == "hammersley") {
        const Range m = get_range(a, "m", {0, 10});
        records = verify_hammersley(int(m.lo), int(m.hi), tol_rel);
    } else if (suite == "lattice") {
        const long long qmax = get_int(a, "qmax", 1597);
        const int rand_pairs = int(get_int(a, "rand", 20));
        const long long rand_qmax = get_int(a, "randqmax", 1000);
        const std::uint64_t seed = rand_pairs > 0 ? require_seed(a) : 0;
        records = verify_lattice(qmax, rand_pairs, rand_qmax, seed, tol_rel);
    } else if (suite == "sums") {
        const Range m = get_range(a, "m", {0, 10});
        records = verify_sums(int(m.lo), int(m.hi));
    } else if (suite == "digital_shift") {
        const int m = int(get_int(a, "m", 4));
        if (get(a, "mode", "mc") == "mbit") {
            records = verify_digital_shift_mbit(m);
        } else {
            records = verify_digital_shift(m, get_int(a, "R", 100000),
                                           int(get_int(a, "w", 64)), require_seed(a));
        }
    } else if (suite == "geometric_shift") {
        records = verify_geometric_shift(get_int(a, "R", 100000), require_seed(a));
    } else if (suite == "bilyk") {
        const long long K = get_int(a, "K", 10000);
        std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
        if (a.options.count("p") || a.options.count("q"))
            pairs.emplace_back(get_int(a, "p", 1), get_int(a, "q", 2));
        else
            pairs = {{3, 5}, {8, 13}, {1, 2}};
        records = verify_bilyk(pairs, K);
    } else if (suite == "grid") {
        const Range m = get_range(a, "m", {1, 5});
        records = verify_grid(int(m.lo), int(m.hi), int(get_int(a, "d", 2)), tol_rel);
    } else if (suite == "relation") {
        std::string family = a.positional.size() > 1 ? a.positional[1] : "all";
        const Range m = get_range(a, "m", {2, 10});
        int hamm_max = -1;
        long long fib_qmax = 0;
        int grid_lo = 1, grid_hi = 0;
        if (family == "all" || family == "hammersley") hamm_max = int(get_range(a, "m", {0, 12}).hi);
        if (family == "all" || family == "lattice") fib_qmax = get_int(a, "qmax", 1597);
        if (family == "all" || family == "grid") {
            grid_lo = int(m.lo);
            grid_hi = int(m.hi);
        }
        if (family != "all" && family != "hammersley" && family != "lattice" &&
            family != "grid")
            throw UnknownSuite("unknown relation family: " + family);
        records = verify_relation(hamm_max, fib_qmax, grid_lo, grid_hi);
    } else if (suite == "inequalities") {
        records = verify_inequalities(int(get_int(a, "sets", 200)), require_seed(a));
    } else if (suite == "one_dim") {
        records = verify_one_dim(int(get_int(a, "sets", 50)), require_seed(a));
    } else {
        throw UnknownSuite("unknown suite: " + suite);
    }

    if (auto it = a.options.find("tol-abs"); it != a.options.end()) {
        const double tol = std::stod(it->second);
        for (auto& r : records) {
            r.tolerance = tol;
            r.pass = r.abs_residual <= tol || r.rel_residual <= tol;
        }
    }
    write_records_csv(std::cout, records);
    return all_passed(records) ? 0 : 1;
}

int cmd_table(const Args& a) {
    if (a.positional.empty()) throw UnknownTable("table needs a table name");
    const std::string& name = a.positional[0];
    if (name == "hammersley") {
        const Range m = get_range(a, "m", {0, 12});
        std::cout << "m,N,standard_sq,extreme_sq,periodic_sq,periodic_slope\n";
        for (long long i = m.lo; i <= m.hi; ++i) {
            std::cout << i << ',' << (1LL << i) << ',' << num(hammersley_standard_sq(int(i)))
                      << ',' << num(hammersley_extreme_sq(int(i))) << ','
                      << num(hammersley_periodic_sq(int(i)));
            if (i > m.lo)
                std::cout << ','
                          << num(hammersley_periodic_sq(int(i)) -
                                 hammersley_periodic_sq(int(i - 1)));
            else
                std::cout << ',';
            std::cout << "\n";
        }
        return 0;
    }
    if (name == "fibonacci_slope") {
        const Range n = get_range(a, "n", {5, 25});
        std::cout << "n,q,trig_sum,normalized,slope,target\n";
        for (long long i = n.lo; i <= n.hi; ++i) {
            const std::int64_t q = fibonacci(int(i));
            const std::int64_t p = fibonacci(int(i) - 1) % q;
            const double trig = lattice_trig_sum(p, q);
            const double normalized = trig / (double(q) * double(q));
            std::cout << i << ',' << q << ',' << num(trig) << ',' << num(normalized) << ','
                      << num(normalized / double(i)) << ',' << num(fibonacci_slope_constant())
                      << "\n";
        }
        return 0;
    }
    if (name == "grid_ratio") {
        const std::string family = get(a, "family", "grid");
        std::cout << "family,index,N,periodic_sq,extreme_sq,ratio\n";
        if (family == "grid") {
            const Range m = get_range(a, "m", {1, 1000});
            for (long long i = m.lo; i <= m.hi; ++i) {
                const double per = grid_periodic_sq(i, 2);
                const double extr = grid_extreme_sq(i, 2);
                std::cout << "grid," << i << ',' << i * i << ',' << num(per) << ','
                          << num(extr) << ',' << num(per / extr) << "\n";
            }
        } else if (family == "hammersley") {
            const Range m = get_range(a, "m", {0, 12});
            for (long long i = m.lo; i <= m.hi; ++i) {
                const double per = hammersley_periodic_sq(int(i));
                const double extr = hammersley_extreme_sq(int(i));
                std::cout << "hammersley," << i << ',' << (1LL << i) << ',' << num(per) << ','
                          << num(extr) << ',' << num(per / extr) << "\n";
            }
        } else if (family == "fibonacci") {
            const Range n = get_range(a, "n", {1, 16});
            for (long long i = n.lo; i <= n.hi; ++i) {
                const std::int64_t q = fibonacci(int(i));
                const LatticeClosedForm f = lattice_closed_form(fibonacci(int(i) - 1) % q, q);
                std::cout << "fibonacci," << i << ',' << q << ',' << num(f.periodic_sq) << ','
                          << num(f.extreme_sq) << ',' << num(f.periodic_sq / f.extreme_sq)
                          << "\n";
            }
        } else {
            throw UnknownTable("unknown grid_ratio family: " + family);
        }
        return 0;
    }
    throw UnknownTable("unknown table: " + name);
}

void usage(std::ostream& os) {
    os << "usage: l2disc <gen|disc|verify|table> ...\n"
          "  gen hammersley m=4 [--out FILE]\n"
          "  gen lattice p=3 q=5 | gen fibonacci n=6 | gen grid m=3 d=2\n"
          "  gen random N=100 d=2 --seed 42\n"
          "  disc FILE [--kinds standard,extreme,periodic]\n"
          "       [--method pair_sum|cell_exact|spectral|one_dim] [--K 256]\n"
          "       [--summation compensated|naive] [--threads T]\n"
          "  verify hammersley m=0..12 | lattice qmax=1597 rand=20 --seed 7 | sums m=0..10\n"
          "  verify digital_shift m=4 R=100000 w=64 --seed 1 | digital_shift m=2 mode=mbit\n"
          "  verify geometric_shift R=100000 --seed 1 | bilyk K=10000 | grid m=1..5 d=2\n"
          "  verify relation [hammersley|lattice|grid|all] | inequalities sets=200 --seed 9\n"
          "  verify one_dim sets=50 --seed 9\n"
          "  table hammersley m=0..12 | fibonacci_slope n=5..25 | grid_ratio m=1..1000\n";
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        usage(std::cerr);
        return 2;
    }
    const std::string cmd = argv[1];
    try {
        const Args args = parse_args(argc, argv, 2);
        apply_threads(args);
        if (cmd == "gen") return cmd_gen(args);
        if (cmd == "disc") return cmd_disc(args);
        if (cmd == "verify") return cmd_verify(args);
        if (cmd == "table") return cmd_table(args);
        if (cmd == "help" || cmd == "--help" || cmd == "-h") {
            usage(std::cout);
            return 0;
        }
        usage(std::cerr);
        std::cerr << "unknown command: " << cmd << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
