// Command-line front end. Exit codes: 0 success/VERIFIED, 1 REFUTED,
// 2 INCONCLUSIVE, 3 malformed input.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "inertia/certify.hpp"
#include "inertia/error.hpp"
#include "inertia/fibermap.hpp"
#include "inertia/hypersurface.hpp"
#include "inertia/io.hpp"
#include "inertia/version.hpp"
#include "inertia/words.hpp"

namespace {

using namespace inertia;

constexpr std::uint64_t kDefaultPrime = 2147483647; // 31-bit default sampling prime

void print_header(const std::string& command) {
    std::cout << "inertia " << kVersion << "\n";
    std::cout << "command: " << command << "\n";
}

void write_out(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error(path + ": cannot open for writing");
    out << content;
}

int aggregate_exit(const std::vector<Verdict>& verdicts) {
    int worst = 0;
    bool inconclusive = false;
    for (const Verdict& v : verdicts) {
        if (v.status == Status::Refuted) worst = 1;
        if (v.status == Status::Inconclusive) inconclusive = true;
    }
    if (worst == 1) return 1;
    return inconclusive ? 2 : 0;
}

std::vector<std::size_t> axes_to_run(const MultiQuadric& x, std::optional<std::int64_t> axis) {
    if (!axis) {
        std::vector<std::size_t> all(x.n_plus_1());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return all;
    }
    if (*axis < 1 || static_cast<std::size_t>(*axis) > x.n_plus_1())
        throw parse_error("axis " + std::to_string(*axis) + " out of range 1.." +
                          std::to_string(x.n_plus_1()));
    return {static_cast<std::size_t>(*axis - 1)};
}

int run_verdicts(const std::vector<Verdict>& verdicts, const std::string& out_path) {
    std::string json;
    for (const Verdict& v : verdicts) {
        std::cout << v.to_text();
        json += verdict_to_json(v);
    }
    if (!out_path.empty()) write_out(out_path, json);
    return aggregate_exit(verdicts);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact birational maps of multidegree-(2,...,2) hypersurfaces in (P^1)^{n+1}\n"
                 "Words compose right to left: in \"R1 R2\" the letter R2 acts first.\n"};
    app.require_subcommand(1);

    std::string in_path, out_path, word_text, point_text, field_text = "Q", lift_text = "tau";
    std::uint64_t seed = 0, kmax = 8;
    std::size_t trials = 100, count = 1, n_plus_1 = 4;
    std::int64_t max_coeff = 20;
    std::optional<std::int64_t> axis;
    bool mutate = false;

    auto add_in = [&](CLI::App* sub) {
        sub->add_option("--in", in_path, "hypersurface file")->required();
    };
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "random seed (default 0)");
    };
    auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "write machine-readable records here");
    };
    auto add_axis = [&](CLI::App* sub) {
        sub->add_option("--axis", axis, "1-based axis (default: all axes)");
    };
    auto add_trials = [&](CLI::App* sub) {
        sub->add_option("--trials", trials, "sampled trials (default 100)");
    };

    CLI::App* gen = app.add_subcommand("gen", "generate a random hypersurface passing the genericity proxy");
    gen->add_option("--n", n_plus_1, "number of P^1 factors")->required();
    gen->add_option("--field", field_text, "Q or Fp:<p> (default Q)");
    gen->add_option("--max-coeff", max_coeff, "coefficient box over Q (default 20)");
    gen->add_option("--out", out_path, "output hypersurface file")->required();
    add_seed(gen);

    CLI::App* decompose = app.add_subcommand("decompose", "print the per-axis fiber coefficients F0, F1, F2");
    add_in(decompose);
    add_axis(decompose);

    CLI::App* genericity = app.add_subcommand("genericity", "run the genericity proxy checks");
    add_in(genericity);

    CLI::App* apply = app.add_subcommand("apply", "apply a word to a point");
    add_in(apply);
    apply->add_option("--word", word_text, "word over T/S/R/I letters")->required();
    apply->add_option("--point", point_text, "comma-separated coordinates; [u:v] allowed")->required();
    apply->add_option("--lift", lift_text, "lift for I letters: tau or sigma (default tau)");

    CLI::App* onx = app.add_subcommand("on-x", "test whether a point lies on the hypersurface");
    add_in(onx);
    onx->add_option("--point", point_text, "point to test")->required();

    CLI::App* sample = app.add_subcommand("sample", "sample points of X over F_p");
    add_in(sample);
    sample->add_option("--axis", axis, "1-based fiber axis")->required();
    sample->add_option("--count", count, "number of points (default 1)");
    add_seed(sample);

    CLI::App* cinertia = app.add_subcommand("certify-inertia", "check that R fixes sampled points of X");
    add_in(cinertia);
    add_axis(cinertia);
    add_trials(cinertia);
    add_seed(cinertia);
    add_out(cinertia);
    cinertia->add_flag("--mutate", mutate, "corrupt the map first (self-test; expect REFUTED)");

    CLI::App* cagree = app.add_subcommand("certify-agree", "check that T and S agree on sampled points of X");
    add_in(cagree);
    add_axis(cagree);
    add_trials(cagree);
    add_seed(cagree);
    add_out(cagree);

    CLI::App* cfree = app.add_subcommand("certify-free", "find a witness that a reduced R word is not the identity");
    add_in(cfree);
    cfree->add_option("--word", word_text, "word over R letters")->required();
    add_trials(cfree);
    add_seed(cfree);
    add_out(cfree);

    CLI::App* order = app.add_subcommand("order-check", "symbolic scalar-matrix test for powers of R");
    add_in(order);
    add_axis(order);
    order->add_option("--kmax", kmax, "largest power to test (default 8)");
    add_out(order);

    CLI::App* uccheck = app.add_subcommand("uc-check", "compare an I word's action with its reduced form");
    add_in(uccheck);
    uccheck->add_option("--word", word_text, "word over I letters")->required();
    uccheck->add_option("--lift", lift_text, "lift for I letters: tau or sigma (default tau)");
    add_trials(uccheck);
    add_seed(uccheck);
    add_out(uccheck);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (gen->parsed()) {
            if (field_text == "Fp") field_text = "Fp:" + std::to_string(kDefaultPrime);
            Field f = Field::parse(field_text);
            Rng rng(seed);
            CoeffBox box;
            box.max_abs_num = max_coeff;
            MultiQuadric x = random_multiquadric(n_plus_1, f, rng, box);
            write_out(out_path, write_hypersurface(x));
            print_header("gen");
            std::cout << "seed: " << seed << "\n";
            std::cout << "field: " << f.to_string() << "\n";
            std::cout << "n_plus_1: " << n_plus_1 << "\n";
            std::cout << "terms: " << x.poly().terms().size() << "\n";
            std::cout << "genericity: PASS\n";
            std::cout << "wrote: " << out_path << "\n";
            return 0;
        }

        if (decompose->parsed()) {
            MultiQuadric x = read_hypersurface_file(in_path);
            print_header("decompose");
            for (std::size_t i : axes_to_run(x, axis)) {
                AxisDecomposition d = x.decompose(i);
                std::cout << "axis " << i + 1 << ":\n";
                std::cout << "  F0: " << d.f0.to_string() << "\n";
                std::cout << "  F1: " << d.f1.to_string() << "\n";
                std::cout << "  F2: " << d.f2.to_string() << "\n";
                std::cout << "  discriminant: " << x.discriminant(i).to_string() << "\n";
            }
            return 0;
        }

        if (genericity->parsed()) {
            MultiQuadric x = read_hypersurface_file(in_path);
            print_header("genericity");
            GenericityReport rep = x.genericity();
            std::cout << rep.to_string();
            return rep.pass ? 0 : 1;
        }

        if (apply->parsed()) {
            MultiQuadric x = read_hypersurface_file(in_path);
            Word w = parse_word(word_text, x.n_plus_1());
            Point p = parse_point(point_text, x.field(), x.n_plus_1());
            Lift lift = lift_text == "sigma" ? Lift::Sigma : Lift::Tau;
            print_header("apply");
            std::cout << "word: " << w.to_string() << "\n";
            std::cout << "point: " << p.to_affine_string() << "\n";
            WordEval e = evaluate_word(w, p, x, lift);
            if (e.indeterminate()) {
                std::cout << "image: indeterminate at letter " << *e.indeterminate_letter + 1
                          << "\n";
            } else {
                std::cout << "image: " << e.point->to_affine_string() << "\n";
                std::cout << "image_homogeneous: " << e.point->to_string() << "\n";
            }
            return 0;
        }

        if (onx->parsed()) {
            MultiQuadric x = read_hypersurface_file(in_path);
            Point p = parse_point(point_text, x.field(), x.n_plus_1());
            print_header("on-x");
            std::cout << "point: " << p.to_string() << "\n";
            std::cout << "on_x: " << (x.contains(p) ? "true" : "false") << "\n";
            return 0;
        }

        if (sample->parsed()) {
            MultiQuadric x = read_hypersurface_file(in_path);
            std::size_t ax = axes_to_run(x, axis).front();
            print_header("sample");
            std::cout << "seed: " << seed << "\n";
            Rng rng(seed);
            try {
                for (std::size_t i = 0; i < count; ++i) {
                    Point p = sample_on_x(x, ax, rng);
                    std::cout << "point: " << p.to_string() << "\n";
                }
            } catch (const sampling_exhausted& e) {
                std::cout << "sampling exhausted: " << e.what() << "\n";
                return 2;
            }
            return 0;
        }

        if (cinertia->parsed()) {
            MultiQuadric x = read_hypersurface_file(in_path);
            print_header("certify-inertia");
            std::vector<Verdict> verdicts;
            for (std::size_t i : axes_to_run(x, axis)) {
                if (mutate) {
                    FiberMap fwd = FiberMap::rho(x, i);
                    FiberMap one_off = FiberMap::from_entries(
                        i, fwd.a(), fwd.b() + MPoly::constant(x.field(), x.n_plus_1(),
                                                              Scalar::one(x.field())),
                        fwd.c(), fwd.d());
                    verdicts.push_back(certify_inertia_maps(x, i, one_off,
                                                            FiberMap::rho_inv(x, i), trials,
                                                            seed));
                } else {
                    verdicts.push_back(certify_inertia(x, i, trials, seed));
                }
            }
            return run_verdicts(verdicts, out_path);
        }

        if (cagree->parsed()) {
            MultiQuadric x = read_hypersurface_file(in_path);
            print_header("certify-agree");
            std::vector<Verdict> verdicts;
            for (std::size_t i : axes_to_run(x, axis))
                verdicts.push_back(certify_tau_sigma_agree(x, i, trials, seed));
            return run_verdicts(verdicts, out_path);
        }

        if (cfree->parsed()) {
            MultiQuadric x = read_hypersurface_file(in_path);
            Word w = parse_word(word_text, x.n_plus_1());
            print_header("certify-free");
            std::vector<Verdict> verdicts{certify_nontrivial(w, x, trials, seed)};
            return run_verdicts(verdicts, out_path);
        }

        if (order->parsed()) {
            MultiQuadric x = read_hypersurface_file(in_path);
            print_header("order-check");
            std::vector<Verdict> verdicts;
            for (std::size_t i : axes_to_run(x, axis))
                verdicts.push_back(order_check(x, i, kmax));
            return run_verdicts(verdicts, out_path);
        }

        if (uccheck->parsed()) {
            MultiQuadric x = read_hypersurface_file(in_path);
            Word w = parse_word(word_text, x.n_plus_1());
            Lift lift = lift_text == "sigma" ? Lift::Sigma : Lift::Tau;
            print_header("uc-check");
            std::vector<Verdict> verdicts{uc_oracle_check(w, x, trials, seed, lift)};
            return run_verdicts(verdicts, out_path);
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const structural_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const sampling_exhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 3;
}
