#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relaymap/completion.hpp"
#include "relaymap/constellation.hpp"
#include "relaymap/constraints.hpp"
#include "relaymap/fades.hpp"
#include "relaymap/io.hpp"
#include "relaymap/mapbook.hpp"
#include "relaymap/metrics.hpp"
#include "relaymap/rectangle.hpp"
#include "relaymap/sim.hpp"

namespace rm = relaymap;

namespace {

rm::SingularFade parse_fade_arg(const rm::PskConfig& cfg, const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(tok);
    if (parts.size() < 3 || parts.size() > 4)
        throw CLI::ValidationError("--fade", "expected k1,k2,m[,aligned|offset]");
    rm::SingularFade f =
        rm::make_fade(cfg, std::stoi(parts[0]), std::stoi(parts[1]), std::stoi(parts[2]));
    if (parts.size() == 4 && rm::phase_class_from_string(parts[3]) != f.cls)
        throw CLI::ValidationError("--fade", "phase class inconsistent with k1,k2 parity");
    return f;
}

rm::MapBook obtain_book(int m, const std::string& path, const rm::AssembleOptions& opts) {
    if (!path.empty()) {
        rm::MapBook book = rm::mapbook_from_json(rm::read_json_file(path));
        if (book.cfg.m != m)
            throw std::runtime_error("book is for M=" + std::to_string(book.cfg.m));
        return book;
    }
    return rm::assemble(rm::PskConfig::of(m), opts);
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    return file;
}

void print_grid(std::ostream& os, const rm::GridMap& g) {
    for (int r = 0; r < g.rows(); ++r) {
        for (int c = 0; c < g.cols(); ++c) {
            if (c) os << ' ';
            if (g.has(r, c))
                os << g.at(r, c);
            else
                os << '.';
        }
        os << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adaptive network-coding maps for two-way M-PSK relaying"};
    app.require_subcommand(1);

    int m = 4;
    std::string fade_arg, book_path, out_path;
    rm::AssembleOptions aopts;

    auto add_budget_opts = [&](CLI::App* cmd) {
        cmd->add_option("--max-solutions", aopts.max_solutions, "completion enumeration cap")
            ->envname("RELAYMAP_MAX_SOLUTIONS");
        cmd->add_option("--node-budget", aopts.node_budget, "search node budget")
            ->envname("RELAYMAP_NODE_BUDGET");
        cmd->add_option("--t-max", aopts.t_max, "largest relay alphabet tried (0: M+2)")
            ->envname("RELAYMAP_T_MAX");
    };

    auto* c_fades = app.add_subcommand("fades", "list the singular fade states");
    c_fades->add_option("--m", m, "PSK order")->required();
    c_fades->add_option("--out", out_path, "write JSON here instead of a table");

    auto* c_book = app.add_subcommand("mapbook", "assemble and verify the full map book");
    c_book->add_option("--m", m, "PSK order")->required();
    c_book->add_option("--out", out_path, "write the book as JSON");
    add_budget_opts(c_book);

    bool raw = false, list_squares = false;
    auto* c_complete = app.add_subcommand("complete", "constrain and complete one fade's grid");
    c_complete->add_option("--m", m, "PSK order")->required();
    c_complete->add_option("--fade", fade_arg, "k1,k2,m[,aligned|offset]")->required();
    c_complete->add_flag("--raw", raw, "keep the two constraint families unpaired");
    c_complete->add_flag("--list", list_squares, "print every completion found");
    add_budget_opts(c_complete);

    rm::QuantizeSpec qspec;
    auto* c_quant = app.add_subcommand("quantize", "map the channel-ratio plane to best maps");
    c_quant->add_option("--m", m, "PSK order")->required();
    c_quant->add_option("--book", book_path, "load a map book instead of assembling");
    c_quant->add_option("--gamma-max", qspec.gamma_max, "radial extent");
    c_quant->add_option("--n-gamma", qspec.n_gamma, "radial cells");
    c_quant->add_option("--n-theta", qspec.n_theta, "angular cells");
    c_quant->add_option("--out", out_path, "CSV path ('-' for stdout)");
    add_budget_opts(c_quant);

    rm::SweepOptions sweep;
    std::vector<double> snrs{0, 5, 10, 15, 20};
    std::string schemes_arg = "xor,adaptive";
    double gamma_in = -1, theta_in = 0;
    auto* c_sim = app.add_subcommand("simulate", "Monte Carlo end-to-end SER at a fixed channel");
    c_sim->add_option("--m", m, "PSK order")->required();
    c_sim->add_option("--book", book_path, "load a map book instead of assembling");
    c_sim->add_option("--fade", fade_arg, "pin h_b/h_a to this singular fade");
    c_sim->add_option("--gamma", gamma_in, "|h_b/h_a| (with --theta; alternative to --fade)");
    c_sim->add_option("--theta", theta_in, "arg(h_b/h_a) in radians");
    c_sim->add_option("--snr", snrs, "SNR points in dB")->delimiter(',');
    c_sim->add_option("--trials", sweep.trials, "trials per SNR point");
    c_sim->add_option("--seed", sweep.seed, "RNG seed");
    c_sim->add_option("--schemes", schemes_arg, "comma list from {xor,adaptive}");
    c_sim->add_option("--out", out_path, "CSV path ('-' for stdout)");
    add_budget_opts(c_sim);

    int n_cols = 2, col_offset = 0;
    auto* c_rect = app.add_subcommand("rectangle", "column-deleted map when B uses N-PSK");
    c_rect->add_option("--m", m, "PSK order of end A")->required();
    c_rect->add_option("--n", n_cols, "PSK order of end B")->required();
    c_rect->add_option("--offset", col_offset, "index of B's first column");
    c_rect->add_option("--fade", fade_arg, "target fade (must be singular for the M x N pair)");
    c_rect->add_option("--book", book_path, "load a map book instead of assembling");
    c_rect->add_option("--out", out_path, "write the rectangle as JSON");
    add_budget_opts(c_rect);

    CLI11_PARSE(app, argc, argv);

    try {
        rm::PskConfig cfg = rm::PskConfig::of(m);

        if (c_fades->parsed()) {
            auto fades = rm::enumerate_singular_fades(cfg);
            if (!out_path.empty()) {
                rm::json arr = rm::json::array();
                for (const auto& f : fades) arr.push_back(rm::fade_to_json(f));
                rm::write_json_file(out_path, arr);
            } else {
                std::printf("%zu singular fades on %zu circles\n", fades.size(),
                            rm::singular_circles(cfg).size());
                for (const auto& f : fades) {
                    rm::cplx v = rm::fade_value(cfg, f);
                    std::printf("%-18s gamma=%.6f theta=%+.6f z=%+.6f%+.6fi\n",
                                rm::fade_label(f).c_str(), rm::fade_gamma(cfg, f),
                                rm::fade_theta(cfg, f), v.real(), v.imag());
                }
            }
        }

        if (c_book->parsed()) {
            rm::MapBook book = rm::assemble(cfg, aopts);
            rm::VerifyReport rep = rm::verify(book);
            rm::SeedCounts sc = rm::count_seeds(book);
            std::printf("fades=%d clusterings=%zu seeds=%d (constructed=%d circles=%d)\n",
                        rep.checked, book.clusterings.size(), sc.total, sc.constructed,
                        sc.circles_covered);
            for (const auto& s : book.issues) std::printf("issue: %s\n", s.c_str());
            for (const auto& s : rep.failures) std::printf("FAIL: %s\n", s.c_str());
            if (!out_path.empty()) rm::write_json_file(out_path, rm::mapbook_to_json(book));
            if (!rep.ok || !book.complete) return 1;
        }

        if (c_complete->parsed()) {
            rm::SingularFade f = parse_fade_arg(cfg, fade_arg);
            rm::ConstraintSet cs = rm::generate_constraints(cfg, f);
            bool can_pair = f.k1 != f.k2 && f.k1 != m / 2 && f.k2 != m / 2;
            if (can_pair && !raw) cs = rm::combine_constraints(cfg, cs);
            rm::Cpls cpls = rm::build_cpls(cfg, cs);
            rm::SolveOptions sopts;
            sopts.t_max = aopts.t_max > 0 ? aopts.t_max : m + 2;
            sopts.max_solutions = aopts.max_solutions;
            sopts.node_budget = aopts.node_budget;
            rm::CompletionResult res = rm::complete_min_symbols(cpls, sopts);
            std::printf("fade %s: %zu groups, %d-plex, %d symbols pre-filled\n",
                        rm::fade_label(f).c_str(), cs.groups.size(), cpls.plex_degree,
                        cpls.symbol_count);
            if (res.t_min < 0) {
                std::printf("no completion up to t=%d (%s, %llu nodes)\n", sopts.t_max,
                            rm::to_string(res.status).c_str(),
                            static_cast<unsigned long long>(res.nodes));
                return 1;
            }
            std::printf("t_min=%d canonical_completions=%zu status=%s nodes=%llu\n", res.t_min,
                        res.squares.size(), rm::to_string(res.status).c_str(),
                        static_cast<unsigned long long>(res.nodes));
            if (res.t_min <= 20) {
                unsigned long long fact = 1;
                for (int i = 2; i <= res.t_min; ++i) fact *= i;
                std::printf("labeled_completions=%llu (canonical x t_min!)\n",
                            fact * res.squares.size());
            }
            if (list_squares)
                for (const auto& sq : res.squares) {
                    print_grid(std::cout, sq);
                    std::cout << '\n';
                }
            if (!out_path.empty()) {
                rm::json j;
                j["constraints"] = rm::constraints_to_json(cs);
                j["t_min"] = res.t_min;
                j["status"] = rm::to_string(res.status);
                rm::json arr = rm::json::array();
                for (const auto& sq : res.squares) arr.push_back(rm::grid_to_json(sq));
                j["squares"] = std::move(arr);
                rm::write_json_file(out_path, j);
            }
        }

        if (c_quant->parsed()) {
            rm::MapBook book = obtain_book(m, book_path, aopts);
            auto rows = rm::quantize_plane(cfg, book.clusterings, qspec);
            std::ofstream file;
            rm::write_region_csv(open_out(file, out_path), rows);
        }

        if (c_sim->parsed()) {
            rm::MapBook book = obtain_book(m, book_path, aopts);
            if (!fade_arg.empty()) {
                sweep.h_b = rm::fade_value(cfg, parse_fade_arg(cfg, fade_arg));
            } else if (gamma_in > 0) {
                sweep.h_b = std::polar(gamma_in, theta_in);
            } else {
                throw CLI::ValidationError("simulate", "give --fade or --gamma/--theta");
            }
            sweep.snr_db = snrs;
            rm::Clustering xor_cl = rm::to_clustering(rm::xor_square(cfg));
            std::vector<rm::SerScheme> schemes;
            std::stringstream ss(schemes_arg);
            std::string name;
            while (std::getline(ss, name, ',')) {
                rm::SerScheme s;
                s.name = name;
                if (name == "xor")
                    s.fixed = &xor_cl;
                else if (name == "adaptive")
                    s.book = &book;
                else
                    throw CLI::ValidationError("--schemes", "unknown scheme " + name);
                schemes.push_back(s);
            }
            auto points = rm::run_ser_sweep(cfg, schemes, sweep);
            std::ofstream file;
            rm::write_ser_csv(open_out(file, out_path), points);
        }

        if (c_rect->parsed()) {
            auto keep = rm::kept_columns(cfg, n_cols, col_offset);
            auto allowed = rm::rectangle_singular_fades(cfg, keep);
            if (fade_arg.empty()) {
                std::printf("%zu of %zu fades stay singular for the %dx%d pair\n", allowed.size(),
                            rm::singular_fade_count(cfg), m, n_cols);
                for (const auto& f : allowed) std::printf("%s\n", rm::fade_label(f).c_str());
                return 0;
            }
            rm::SingularFade f = parse_fade_arg(cfg, fade_arg);
            if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
                throw std::runtime_error(rm::fade_label(f) +
                                         " is not singular once B drops to " +
                                         std::to_string(n_cols) + "-PSK");
            rm::MapBook book = obtain_book(m, book_path, aopts);
            rm::GridMap rect = rm::delete_columns(book.grid_for(f), keep);
            bool ok = rm::rectangle_removes(cfg, rect, keep, f);
            std::printf("%s removed=%s\n", rm::fade_label(f).c_str(), ok ? "yes" : "no");
            print_grid(std::cout, rect);
            if (!out_path.empty()) {
                rm::json j;
                j["m"] = m;
                j["n"] = n_cols;
                j["keep"] = keep;
                j["fade"] = rm::fade_to_json(f);
                j["removed"] = ok;
                j["grid"] = rm::grid_to_json(rect);
                rm::write_json_file(out_path, j);
            }
            if (!ok) return 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
