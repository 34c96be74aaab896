// Command-line front end: JSON/CSV I/O, seeded generators and report
// emission for the threshold, certification, domination, Schur, strata,
// Rayleigh and fuzzing entry points.

#include "entrywise/entrywise.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using entrywise::Json;
using entrywise::Rational;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    if (out.empty()) throw std::invalid_argument("empty comma list");
    return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    for (const std::string& s : split_list(csv)) out.push_back(std::stod(s));
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    for (const std::string& s : split_list(csv)) out.push_back(entrywise::parse_rational(s));
    return out;
}

entrywise::Partition parse_partition(const std::string& text) {
    // "1,2|3,4" with 1-based indices
    std::vector<std::vector<std::size_t>> blocks;
    std::size_t ground = 0;
    std::stringstream ss(text);
    std::string blockText;
    while (std::getline(ss, blockText, '|')) {
        std::vector<std::size_t> block;
        for (const std::string& s : split_list(blockText)) {
            const long v = std::stol(s);
            if (v < 1) throw std::invalid_argument("partition indices are 1-based");
            block.push_back(static_cast<std::size_t>(v - 1));
            ground = std::max(ground, static_cast<std::size_t>(v));
        }
        blocks.push_back(std::move(block));
    }
    return entrywise::Partition::from_blocks(std::move(blocks), ground);
}

void flatten_json(const Json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            flatten_json(value, prefix.empty() ? key : prefix + "." + key, os);
        }
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& value : j) {
            flatten_json(value, prefix + "[" + std::to_string(i++) + "]", os);
        }
    } else {
        os << prefix << "," << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const Json& j, const std::string& format) {
    if (format == "csv") {
        std::ostringstream os;
        flatten_json(j, "", os);
        std::cout << os.str();
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

struct SpecOptions {
    std::string specPath;
    std::string cList, nList;
    double M = 0.0;
    bool haveM = false;
    std::string cPrime, rho;
    std::string testSet;

    void attach(CLI::App* cmd) {
        cmd->add_option("--spec", specPath, "spec JSON file {c, n, M, cprime, rho, testset}");
        cmd->add_option("--c", cList, "coefficients, comma list (rationals allowed, e.g. 1,1/2)");
        cmd->add_option("--n", nList, "exponents, comma list");
        cmd->add_option("--M", M, "perturbation power M")->each([this](const std::string&) { haveM = true; });
        cmd->add_option("--cprime", cPrime, "perturbation coefficient c'");
        cmd->add_option("--rho", rho, "radius rho (default 1)");
        cmd->add_option("--testset", testSet,
                        "rank-one-open | rank-one-closed | full-closed-real-powers | complex-disc-consecutive");
    }

    entrywise::PreserverSpec build() const {
        Json j;
        if (!specPath.empty()) {
            std::ifstream in(specPath);
            if (!in) throw std::invalid_argument("cannot open spec file '" + specPath + "'");
            j = Json::parse(in);
        } else {
            if (cList.empty() || nList.empty() || !haveM) {
                throw std::invalid_argument("spec requires --spec or all of --c, --n, --M");
            }
            j["c"] = Json::array();
            for (const Rational& c : parse_rational_list(cList)) j["c"].push_back(entrywise::to_fraction_string(c));
            j["n"] = parse_double_list(nList);
            j["M"] = M;
        }
        if (!cPrime.empty()) j["cprime"] = cPrime;
        if (!rho.empty()) {
            j["rho"] = rho;
        } else if (!j.contains("rho")) {
            j["rho"] = "1";
        }
        if (!testSet.empty()) j["testset"] = testSet;
        return entrywise::spec_from_json(j);
    }
};

Json rational_pair_json(const Rational& value) {
    Json j;
    j["decimal"] = entrywise::to_decimal_string(value);
    j["exact"] = entrywise::to_fraction_string(value);
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entrywise positivity-preserver calculus"};
    app.require_subcommand(1);

    std::string format = "json";
    std::uint64_t seed = 0;
    entrywise::ToleranceProfile tol;
    app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", seed, "64-bit seed for the deterministic rng");
    app.add_option("--tol-psd", tol.psdFloor, "relative PSD floor (default 1e-9)");
    app.add_option("--tol-rank", tol.rankGap, "relative rank gap (default 1e-8)");

    // threshold
    auto* cmdThreshold = app.add_subcommand("threshold", "sharp constant C and the bound -1/C");
    SpecOptions thresholdSpec;
    thresholdSpec.attach(cmdThreshold);

    // certify
    auto* cmdCertify = app.add_subcommand("certify", "positive-definiteness equivalence report");
    SpecOptions certifySpec;
    certifySpec.attach(cmdCertify);
    std::string certifyMatrix;
    cmdCertify->add_option("--matrix", certifyMatrix, "matrix file (JSON or CSV)")->required();

    // dominate
    auto* cmdDominate = app.add_subcommand("dominate", "rank-one lower bound with distinct entries");
    std::string dominateMatrix;
    cmdDominate->add_option("--matrix", dominateMatrix, "matrix file (JSON or CSV)")->required();

    // sharpness
    auto* cmdSharp = app.add_subcommand("sharpness", "witness search around the sharp threshold");
    SpecOptions sharpSpec;
    sharpSpec.attach(cmdSharp);
    int sharpSamples = 200;
    int sharpGrid = 64;
    cmdSharp->add_option("--samples", sharpSamples, "random test-set samples (default 200)");
    cmdSharp->add_option("--grid", sharpGrid, "grid resolution per coordinate (default 64)");

    // schur
    auto* cmdSchur = app.add_subcommand("schur", "Schur polynomial evaluation");
    std::string schurN, schurU, schurMode = "tableaux", schurQ;
    bool schurExact = false;
    cmdSchur->add_option("--n", schurN, "exponent tuple, comma list")->required();
    cmdSchur->add_option("--u", schurU, "evaluation point, comma list");
    cmdSchur->add_option("--mode", schurMode, "bialternant | tableaux | spec-q")
        ->check(CLI::IsMember({"bialternant", "tableaux", "spec-q"}));
    cmdSchur->add_option("--q", schurQ, "specialization parameter for spec-q");
    cmdSchur->add_flag("--exact", schurExact, "exact rational arithmetic");

    // monotone-scan
    auto* cmdMono = app.add_subcommand("monotone-scan", "strict monotonicity certification of Schur ratios");
    std::string monoM, monoN;
    double monoRho = 1.0;
    int monoChains = 100;
    cmdMono->add_option("--m", monoM, "denominator tuple, comma list")->required();
    cmdMono->add_option("--n", monoN, "numerator tuple, comma list")->required();
    cmdMono->add_option("--rho", monoRho, "box radius (default 1)");
    cmdMono->add_option("--chains", monoChains, "number of chains (default 100)");

    // strata (+ strata rank)
    auto* cmdStrata = app.add_subcommand("strata", "block stratification of a matrix");
    std::string strataMatrix;
    cmdStrata->add_option("--matrix", strataMatrix, "matrix file (JSON or CSV)");
    auto* cmdStrataRank = cmdStrata->add_subcommand("rank", "rank prediction on the stratum");
    SpecOptions strataRankSpec;
    strataRankSpec.attach(cmdStrataRank);
    std::string strataRankMatrix;
    cmdStrataRank->add_option("--matrix", strataRankMatrix, "matrix file (JSON or CSV)")->required();

    // rayleigh (+ rayleigh probe)
    auto* cmdRayleigh = app.add_subcommand("rayleigh", "Rayleigh bound C_R against the threshold C");
    SpecOptions rayleighSpec;
    rayleighSpec.attach(cmdRayleigh);
    std::string rayleighMatrix;
    cmdRayleigh->add_option("--matrix", rayleighMatrix, "matrix file (JSON or CSV)");
    auto* cmdProbe = cmdRayleigh->add_subcommand("probe", "stratum-wise continuity probe");
    SpecOptions probeSpec;
    probeSpec.attach(cmdProbe);
    std::string probePartition;
    int probeSteps = 16;
    cmdProbe->add_option("--partition", probePartition, "blocks as 1-based '1,2|3'")->required();
    cmdProbe->add_option("--steps", probeSteps, "path sample count at the coarsest level");

    // fuzz
    auto* cmdFuzz = app.add_subcommand("fuzz", "seeded invariant suites");
    entrywise::FuzzOptions fuzzOptions;
    std::string fuzzFactor = "1";
    cmdFuzz->add_option("--budget", fuzzOptions.budget, "instances per suite (default 10)");
    cmdFuzz->add_option("--suite", fuzzOptions.suite,
                        "all | jacobi-trudi | sharpness | domination | strata-rank | rayleigh-agreement | monotonicity");
    cmdFuzz->add_option("--sharpness-factor", fuzzFactor, "c' = -factor/C in the sharpness suite");
    cmdFuzz->add_option("--workers", fuzzOptions.workers, "worker pool size (default: hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        tol.validate();
        entrywise::Rng rng(seed);

        if (cmdThreshold->parsed()) {
            const entrywise::PreserverSpec spec = thresholdSpec.build();
            const entrywise::ThresholdValue c = entrywise::threshold_C(spec);
            Json out;
            if (c.exact) {
                const Rational exact = c.exact_value();
                out["C"] = entrywise::to_decimal_string(exact);
                out["C_exact"] = entrywise::to_fraction_string(exact);
                out["neg_inv"] = entrywise::to_fraction_string(Rational(-1) / exact);
                out["neg_inv_decimal"] = entrywise::to_decimal_string(Rational(-1) / exact);
            } else {
                out["C"] = entrywise::to_decimal_string(entrywise::rational_from_double(c.value));
                out["neg_inv"] = entrywise::to_decimal_string(entrywise::rational_from_double(-1.0 / c.value));
            }
            emit(out, format);
            return kExitOk;
        }

        if (cmdCertify->parsed()) {
            const entrywise::PreserverSpec spec = certifySpec.build();
            const entrywise::HermitianMatrix a = entrywise::load_matrix(certifyMatrix);
            const entrywise::EquivalenceReport r = entrywise::equivalence_report(spec, a, rng, tol);
            Json out;
            out["has_dominating_vector"] = r.hasDominatingVector;
            out["rows_distinct"] = r.rowsDistinct;
            out["h_pd"] = r.hPD;
            out["f_pd"] = r.fPD;
            out["in_top_stratum"] = r.inTopStratum;
            out["consistent"] = r.consistent();
            if (r.witness) out["witness"] = entrywise::vector_to_json(*r.witness, a.is_real());
            emit(out, format);
            return r.consistent() ? kExitOk : kExitViolation;
        }

        if (cmdDominate->parsed()) {
            const entrywise::HermitianMatrix a = entrywise::load_matrix(dominateMatrix);
            const entrywise::DominationResult r = entrywise::dominating_vector(a, rng, tol);
            Json out;
            out["u"] = entrywise::vector_to_json(r.u, a.is_real());
            out["residual_min_eig"] = r.residualMinEig;
            emit(out, format);
            return kExitOk;
        }

        if (cmdSharp->parsed()) {
            entrywise::PreserverSpec spec = sharpSpec.build();
            if (spec.cPrime == 0 && sharpSpec.cPrime.empty()) {
                entrywise::inject_cprime_factor(spec, 1);  // boundary value -1/C
            }
            const entrywise::SharpnessSearchReport r =
                entrywise::sharpness_search(spec, sharpSamples, rng, tol, sharpGrid);
            Json out;
            out["threshold_C"] = r.thresholdValue;
            out["cprime"] = r.cprimeUsed;
            out["samples"] = r.samples;
            out["min_eig_sampled"] = r.minEigSampled;
            out["grid_min_eig"] = r.gridMinEig;
            out["violation_found"] = r.violationFound;
            if (r.witness) {
                out["witness_u"] = entrywise::vector_to_json(r.witness->cast<entrywise::Complex>(), true);
            }
            emit(out, format);
            return r.violationFound ? kExitViolation : kExitOk;
        }

        if (cmdSchur->parsed()) {
            const entrywise::ExponentTuple n{parse_double_list(schurN)};
            Json out;
            if (schurMode == "spec-q") {
                if (schurQ.empty()) throw std::invalid_argument("spec-q mode requires --q");
                const Rational value = entrywise::schur_principal_specialization(n, entrywise::parse_rational(schurQ));
                out["value"] = entrywise::to_decimal_string(value);
                out["value_exact"] = entrywise::to_fraction_string(value);
            } else if (schurExact) {
                if (schurU.empty()) throw std::invalid_argument("--u is required");
                const std::vector<Rational> u = parse_rational_list(schurU);
                if (schurMode == "tableaux") {
                    const auto r = entrywise::schur_tableaux(std::span<const Rational>(u), n);
                    out["value"] = entrywise::to_decimal_string(r.value);
                    out["value_exact"] = entrywise::to_fraction_string(r.value);
                    out["count"] = r.count.str();
                } else {
                    const Rational value = entrywise::schur_bialternant(std::span<const Rational>(u), n);
                    out["value"] = entrywise::to_decimal_string(value);
                    out["value_exact"] = entrywise::to_fraction_string(value);
                }
            } else {
                if (schurU.empty()) throw std::invalid_argument("--u is required");
                const std::vector<double> u = parse_double_list(schurU);
                if (schurMode == "tableaux") {
                    const auto r = entrywise::schur_tableaux(std::span<const double>(u), n);
                    out["value"] = r.value;
                    out["count"] = r.count.str();
                } else {
                    out["value"] = entrywise::schur_bialternant(std::span<const double>(u), n);
                }
            }
            emit(out, format);
            return kExitOk;
        }

        if (cmdMono->parsed()) {
            const entrywise::ExponentTuple m{parse_double_list(monoM)};
            const entrywise::ExponentTuple n{parse_double_list(monoN)};
            const entrywise::MonotonicityReport r =
                entrywise::monotonicity_certify(m, n, monoRho, rng, monoChains, tol);
            Json out;
            out["chains"] = r.chainsRun;
            out["evaluations"] = r.evaluations;
            out["min_forward_difference"] = r.minForwardDifference;
            out["strict_violation"] = r.strictViolation;
            out["non_strict_flagged"] = r.nonStrictFlagged;
            out["bound_holds"] = r.boundHolds;
            out["max_bound_excess"] = r.maxBoundExcess;
            out["exact_mode"] = r.exactMode;
            emit(out, format);
            return (r.strictViolation || !r.boundHolds) ? kExitViolation : kExitOk;
        }

        if (cmdStrata->parsed()) {
            if (cmdStrataRank->parsed()) {
                const entrywise::PreserverSpec spec = strataRankSpec.build();
                const entrywise::HermitianMatrix a = entrywise::load_matrix(strataRankMatrix);
                const entrywise::StratumDiagnostics d = entrywise::rank_on_stratum(spec, a, tol);
                Json out;
                out["partition"] = entrywise::partition_to_json(d.partition);
                out["compressed"] = entrywise::matrix_to_json(d.compressed);
                out["predicted_rank"] = d.predictedRank;
                out["rank_f"] = d.rankF;
                out["rank_h"] = d.rankH;
                if (d.rankG) out["rank_g"] = *d.rankG;
                out["agrees"] = d.agrees;
                emit(out, format);
                return d.agrees ? kExitOk : kExitViolation;
            }
            if (strataMatrix.empty()) throw std::invalid_argument("strata requires --matrix");
            const entrywise::HermitianMatrix a = entrywise::load_matrix(strataMatrix);
            emit(entrywise::partition_to_json(entrywise::partition_of(a, tol)), format);
            return kExitOk;
        }

        if (cmdRayleigh->parsed()) {
            if (cmdProbe->parsed()) {
                const entrywise::PreserverSpec spec = probeSpec.build();
                const entrywise::Partition pi = parse_partition(probePartition);
                const auto data = entrywise::RayleighData::from_spec(spec);
                // seeded in-stratum path in compressed coordinates
                const auto m = static_cast<Eigen::Index>(pi.size());
                const entrywise::HermitianMatrix core =
                    entrywise::random_pd_core_distinct_rows(rng, m, entrywise::Field::Real, spec.rho_d());
                entrywise::HermitianMatrix direction = entrywise::random_psd(rng, m, entrywise::Field::Real, 0.05 * spec.rho_d());
                const entrywise::ContinuityReport r =
                    entrywise::continuity_probe(pi, data, core, direction, probeSteps, tol);
                Json out;
                out["in_stratum_throughout"] = r.inStratumThroughout;
                out["oscillations"] = r.oscillations;
                out["ratios"] = r.ratios;
                out["ratio_test_passed"] = r.ratioTestPassed;
                if (r.jump) {
                    out["jump"] = Json{{"t", r.jump->t}, {"c_R_inside", r.jump->cRInside}, {"c_R_outside", r.jump->cROutside}};
                }
                emit(out, format);
                return (r.inStratumThroughout && !r.ratioTestPassed) ? kExitViolation : kExitOk;
            }
            if (rayleighMatrix.empty()) throw std::invalid_argument("rayleigh requires --matrix");
            const entrywise::PreserverSpec spec = rayleighSpec.build();
            const entrywise::HermitianMatrix a = entrywise::load_matrix(rayleighMatrix);
            const entrywise::EqualityGap gap = entrywise::equality_gap(a, spec, tol);
            Json out;
            out["cR"] = gap.cR;
            out["cV"] = gap.cV;
            out["gap"] = gap.gap;
            emit(out, format);
            return kExitOk;
        }

        if (cmdFuzz->parsed()) {
            fuzzOptions.seed = seed;
            fuzzOptions.sharpnessFactor = entrywise::parse_rational(fuzzFactor);
            const entrywise::FuzzSummary summary = entrywise::run_fuzz(fuzzOptions);
            Json out;
            Json suites = Json::array();
            for (const entrywise::SuiteResult& s : summary.suites) {
                Json sj;
                sj["suite"] = s.name;
                sj["passed"] = s.passed;
                sj["failed"] = s.failed;
                if (!s.firstCounterexample.empty()) sj["first_counterexample"] = s.firstCounterexample;
                suites.push_back(std::move(sj));
            }
            out["seed"] = seed;
            out["budget"] = fuzzOptions.budget;
            out["suites"] = std::move(suites);
            out["all_passed"] = summary.allPassed;
            emit(out, format);
            return summary.allPassed ? kExitOk : kExitViolation;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
