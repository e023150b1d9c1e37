#include "inertia/certify.hpp"

#include <algorithm>

#include "inertia/error.hpp"
#include "inertia/rng.hpp"

namespace inertia {

const char* to_string(Status s) {
    switch (s) {
        case Status::Verified: return "VERIFIED";
        case Status::Refuted: return "REFUTED";
        case Status::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

std::string Verdict::to_text() const {
    std::string s;
    s += "check: " + check + "\n";
    s += "status: " + std::string(to_string(status)) + "\n";
    if (axis) s += "axis: " + std::to_string(*axis + 1) + "\n";
    if (!word_echo.empty()) s += "word: " + word_echo + "\n";
    s += "seed: " + std::to_string(seed) + "\n";
    s += "trials_used: " + std::to_string(trials_used) + "\n";
    s += "indeterminate_hits: " + std::to_string(indeterminate_hits) + "\n";
    if (!detail.empty()) s += "detail: " + detail + "\n";
    if (witness_trial) s += "witness_trial: " + std::to_string(*witness_trial) + "\n";
    if (witness_before) s += "witness_before: " + witness_before->to_string() + "\n";
    if (witness_after) s += "witness_after: " + witness_after->to_string() + "\n";
    return s;
}

int Verdict::exit_code() const {
    switch (status) {
        case Status::Verified: return 0;
        case Status::Refuted: return 1;
        case Status::Inconclusive: return 2;
    }
    return 2;
}

Word lift_restricted(const Word& w, Lift lift) {
    std::vector<Letter> letters;
    letters.reserve(w.size());
    for (const Letter& l : w.letters()) {
        if (l.kind != Gen::Iota)
            throw structural_error("lifting a word that is not restricted");
        letters.push_back(Letter{lift == Lift::Tau ? Gen::Tau : Gen::Sigma, l.axis});
    }
    return Word(std::move(letters));
}

std::vector<FiberMap> instantiate_word(const Word& w, const MultiQuadric& x, Lift lift) {
    std::vector<FiberMap> maps;
    maps.reserve(w.size());
    for (const Letter& l : w.letters()) {
        if (l.axis >= x.n_plus_1())
            throw structural_error("word letter axis exceeds hypersurface factor count");
        switch (l.kind) {
            case Gen::Tau: maps.push_back(FiberMap::tau(x, l.axis)); break;
            case Gen::Sigma: maps.push_back(FiberMap::sigma(x, l.axis)); break;
            case Gen::Rho: maps.push_back(FiberMap::rho(x, l.axis)); break;
            case Gen::RhoInv: maps.push_back(FiberMap::rho_inv(x, l.axis)); break;
            case Gen::Iota:
                maps.push_back(lift == Lift::Tau ? FiberMap::tau(x, l.axis)
                                                 : FiberMap::sigma(x, l.axis));
                break;
        }
    }
    return maps;
}

WordEval evaluate_letters(const std::vector<FiberMap>& maps, const Point& p) {
    Point cur = p;
    for (std::size_t idx = maps.size(); idx-- > 0;) {
        auto next = maps[idx].apply(cur);
        if (!next) return WordEval{std::nullopt, idx};
        cur = std::move(*next);
    }
    return WordEval{std::move(cur), std::nullopt};
}

WordEval evaluate_word(const Word& w, const Point& p, const MultiQuadric& x, Lift lift) {
    return evaluate_letters(instantiate_word(w, x, lift), p);
}

namespace {

std::size_t attempt_cap(std::size_t trials) { return std::max<std::size_t>(4 * trials, trials + 32); }

Scalar random_affine_value(const Field& f, Rng& rng) {
    if (f.is_fp()) return Scalar::residue(f, rng.below(f.modulus()));
    return Scalar::from_int(f, rng.int_in(-20, 20));
}

Verdict base_verdict(std::string check, std::uint64_t seed) {
    Verdict v;
    v.check = std::move(check);
    v.seed = seed;
    return v;
}

// Shared sampling loop: draws points of X on random axes with per-attempt
// derived seeds and hands each one to visit. visit returns false to stop
// (after filling the verdict with a refutation or early verification).
template <typename Visit>
void run_sampled_trials(Verdict& v, const MultiQuadric& x, std::size_t trials,
                        std::uint64_t seed, bool fixed_axis, std::size_t axis, Visit visit) {
    if (trials == 0) throw structural_error("trial count must be positive");
    std::size_t effective = 0;
    const std::size_t cap = attempt_cap(trials);
    for (std::size_t attempt = 0; attempt < cap && effective < trials; ++attempt) {
        Rng rng(Rng::derive(seed, attempt));
        std::size_t sample_axis = fixed_axis ? axis : rng.below(x.n_plus_1());
        Point p = sample_on_x(x, sample_axis, rng);
        if (!visit(p, rng, effective)) return;
        v.trials_used = effective;
    }
    if (effective < trials) {
        v.status = Status::Inconclusive;
        v.detail = "indeterminate hits exhausted the attempt budget (" +
                   std::to_string(effective) + "/" + std::to_string(trials) +
                   " effective trials)";
    }
}

} // namespace

Verdict certify_inertia_maps(const MultiQuadric& x, std::size_t axis, const FiberMap& fwd,
                             const FiberMap& bwd, std::size_t trials, std::uint64_t seed) {
    if (!x.field().is_fp())
        throw structural_error("inertia certification samples X and needs a prime field");
    Verdict v = base_verdict("inertia", seed);
    v.axis = axis;
    v.word_echo = "R" + std::to_string(axis + 1);
    v.status = Status::Verified;
    v.detail = "sampled points of X fixed by R" + std::to_string(axis + 1) + " and R" +
               std::to_string(axis + 1) + "^-1";
    try {
        run_sampled_trials(v, x, trials, seed, false, 0,
                           [&](const Point& p, Rng&, std::size_t& effective) {
                               for (const FiberMap* m : {&fwd, &bwd}) {
                                   auto q = m->apply(p);
                                   if (!q) {
                                       ++v.indeterminate_hits;
                                       return true;
                                   }
                                   if (*q != p) {
                                       v.status = Status::Refuted;
                                       v.detail = "sampled point of X is moved";
                                       v.witness_trial = effective;
                                       v.witness_before = p;
                                       v.witness_after = *q;
                                       return false;
                                   }
                               }
                               ++effective;
                               return true;
                           });
    } catch (const sampling_exhausted& e) {
        v.status = Status::Inconclusive;
        v.detail = e.what();
    }
    return v;
}

Verdict certify_inertia(const MultiQuadric& x, std::size_t axis, std::size_t trials,
                        std::uint64_t seed) {
    return certify_inertia_maps(x, axis, FiberMap::rho(x, axis), FiberMap::rho_inv(x, axis),
                                trials, seed);
}

Verdict certify_tau_sigma_agree(const MultiQuadric& x, std::size_t axis, std::size_t trials,
                                std::uint64_t seed) {
    if (!x.field().is_fp())
        throw structural_error("covering-involution certification needs a prime field");
    FiberMap t = FiberMap::tau(x, axis);
    FiberMap s = FiberMap::sigma(x, axis);
    MPoly delta = x.discriminant(axis);
    Verdict v = base_verdict("tau-sigma-agree", seed);
    v.axis = axis;
    v.word_echo = "T" + std::to_string(axis + 1) + " vs S" + std::to_string(axis + 1);
    v.status = Status::Verified;
    v.detail = "T and S agree on sampled points of X and swap split fibers";
    auto refute = [&](const char* why, const Point& p, const Point& q, std::size_t trial) {
        v.status = Status::Refuted;
        v.detail = why;
        v.witness_trial = trial;
        v.witness_before = p;
        v.witness_after = q;
    };
    try {
        run_sampled_trials(
            v, x, trials, seed, true, axis,
            [&](const Point& p, Rng&, std::size_t& effective) {
                auto tp = t.apply(p);
                auto sp = s.apply(p);
                if (!tp || !sp) {
                    ++v.indeterminate_hits;
                    return true;
                }
                if (*tp != *sp) {
                    refute("T and S disagree at a sampled point", p, *tp, effective);
                    return false;
                }
                if (!x.contains(*tp)) {
                    refute("image of a sampled point leaves X", p, *tp, effective);
                    return false;
                }
                for (std::size_t j = 0; j < x.n_plus_1(); ++j) {
                    if (j == axis) continue;
                    if (tp->coord(j).u != p.coord(j).u || tp->coord(j).v != p.coord(j).v) {
                        refute("a coordinate off the axis changed", p, *tp, effective);
                        return false;
                    }
                }
                std::vector<Scalar> z;
                for (std::size_t j = 0; j < x.n_plus_1(); ++j) z.push_back(p.affine_value(j));
                bool double_root = delta.eval_affine(z).is_zero();
                if (!double_root && *tp == p) {
                    refute("split fiber point not swapped", p, *tp, effective);
                    return false;
                }
                ++effective;
                return true;
            });
    } catch (const sampling_exhausted& e) {
        v.status = Status::Inconclusive;
        v.detail = e.what();
    }
    return v;
}

Verdict order_check(const MultiQuadric& x, std::size_t axis, std::uint64_t k_max) {
    Verdict v = base_verdict("order", 0);
    v.axis = axis;
    v.word_echo = "R" + std::to_string(axis + 1) + "^k, k = 1.." + std::to_string(k_max);
    if (x.discriminant(axis).is_zero()) {
        v.status = Status::Inconclusive;
        v.detail = "axis discriminant vanishes identically; the distinct-eigenvalue "
                   "argument does not apply";
        return v;
    }
    FiberMap r = FiberMap::rho(x, axis);
    FiberMap power = r;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        if (k > 1) power = FiberMap::compose(power, r);
        v.trials_used = k;
        if (auto s = power.scalar_identity()) {
            v.status = Status::Refuted;
            v.detail = "R^" + std::to_string(k) + " is the scalar matrix (" +
                       s->to_string() + ") * I";
            return v;
        }
    }
    v.status = Status::Verified;
    v.detail = "no power up to " + std::to_string(k_max) + " is a scalar matrix";
    return v;
}

Verdict certify_nontrivial(const Word& w, const MultiQuadric& x, std::size_t trials,
                           std::uint64_t seed) {
    for (const Letter& l : w.letters())
        if (l.kind != Gen::Rho && l.kind != Gen::RhoInv)
            throw structural_error("nontriviality certification applies to R words");
    if (trials == 0) throw structural_error("trial count must be positive");
    Word reduced = reduce_rho_free(w);
    if (reduced.empty())
        throw structural_error("word reduces to the empty word; nothing to certify");
    if (!x.genericity().pass)
        throw structural_error("hypersurface fails the genericity proxy");

    Verdict v = base_verdict("nontrivial", seed);
    v.word_echo = w.to_string();
    std::vector<FiberMap> maps = instantiate_word(reduced, x);
    const std::size_t lead_axis = reduced.letters().front().axis;
    const Field& f = x.field();

    for (std::size_t trial = 0; trial < trials; ++trial) {
        Rng rng(Rng::derive(seed, trial));
        std::vector<Scalar> values(x.n_plus_1(), Scalar::zero(f));
        for (std::size_t j = 0; j < x.n_plus_1(); ++j) values[j] = random_affine_value(f, rng);
        Point p = Point::affine(f, values);
        if (trial == 0) p = p.with_coord(lead_axis, ProjCoord{Scalar::one(f), Scalar::zero(f)});
        if (trial == 1) p = p.with_coord(lead_axis, ProjCoord{Scalar::zero(f), Scalar::one(f)});
        v.trials_used = trial + 1;
        if (x.contains(p)) continue;
        WordEval e = evaluate_letters(maps, p);
        if (e.indeterminate()) {
            ++v.indeterminate_hits;
            continue;
        }
        if (*e.point != p) {
            v.status = Status::Verified;
            v.detail = "word moves a point off X; it is not the identity";
            v.witness_trial = trial;
            v.witness_before = p;
            v.witness_after = *e.point;
            return v;
        }
    }
    v.status = Status::Inconclusive;
    v.detail = "no moving point found within the trial budget";
    return v;
}

Verdict uc_oracle_check(const Word& w, const MultiQuadric& x, std::size_t trials,
                        std::uint64_t seed, Lift lift) {
    for (const Letter& l : w.letters())
        if (l.kind != Gen::Iota)
            throw structural_error("uc oracle check applies to I words");
    if (!x.genericity().pass)
        throw structural_error("hypersurface fails the genericity proxy");
    Word reduced = uc_reduce(w);
    std::vector<FiberMap> maps = instantiate_word(w, x, lift);

    Verdict v = base_verdict("uc-oracle", seed);
    v.word_echo = w.to_string();
    v.status = Status::Inconclusive;
    bool expect_fixed = reduced.empty();
    try {
        run_sampled_trials(
            v, x, trials, seed, false, 0,
            [&](const Point& p, Rng&, std::size_t& effective) {
                WordEval e = evaluate_letters(maps, p);
                if (e.indeterminate()) {
                    ++v.indeterminate_hits;
                    return true;
                }
                bool fixed = *e.point == p;
                if (expect_fixed && !fixed) {
                    v.status = Status::Refuted;
                    v.detail = "uc-reduced-empty word moved a sampled point of X";
                    v.witness_trial = effective;
                    v.witness_before = p;
                    v.witness_after = *e.point;
                    return false;
                }
                if (!expect_fixed && !fixed) {
                    v.status = Status::Verified;
                    v.detail = "reduced word " + reduced.to_string() +
                               " moves a sampled point of X, as predicted";
                    v.witness_trial = effective;
                    v.witness_before = p;
                    v.witness_after = *e.point;
                    return false;
                }
                ++effective;
                return true;
            });
    } catch (const sampling_exhausted& e) {
        v.status = Status::Inconclusive;
        v.detail = e.what();
        return v;
    }
    if (v.status == Status::Inconclusive && v.trials_used == trials) {
        if (expect_fixed) {
            v.status = Status::Verified;
            v.detail = "uc-reduced-empty word fixed every sampled point of X";
        } else {
            v.status = Status::Refuted;
            v.detail = "reduced word " + reduced.to_string() +
                       " fixed every sampled point of X, contradicting the oracle";
        }
    }
    return v;
}

} // namespace inertia
