// Command-line workbench for analyzing shrunken LFSR keystreams with linear
// 90/150 null-boundary cellular automata: simulate registers and generators,
// build the equivalent automaton pair, reconstruct keystream from a short
// intercepted window, and report phase relations between automaton cells.

#include <cstdint>
#include <stdexcept>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sgca/attack.hpp"
#include "sgca/automaton.hpp"
#include "sgca/errors.hpp"
#include "sgca/field.hpp"
#include "sgca/modeler.hpp"
#include "sgca/phaseshift.hpp"
#include "sgca/poly.hpp"
#include "sgca/sequences.hpp"
#include "sgca/shrinker.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sgca;

// ---------------------------------------------------------------------------
// Built-in reference checks: every worked example the tool's documentation
// quotes, validated end to end. Returns the number of failing checks.

int run_reference_checks() {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    const BitPoly p1 = BitPoly::parse("1+D^3+D^4");          // data register, short demo
    const BitPoly p1c = BitPoly::parse("1+D+D^3");           // control register, short demo
    const BitPoly p2 = BitPoly::parse("1+D+D^3+D^4+D^5");    // data register, main demo
    const std::string table62 =
        "01011010011111110110001001010001110100110011100000101110101100";

    // Register simulation.
    check("lfsr-control-vector",
          format_bits(Lfsr(p1c, parse_bits("100")).generate(7)) == "0011101");
    check("lfsr-data-vector",
          format_bits(Lfsr(p1, parse_bits("1000")).generate(15)) == "000100110101111");

    // Shrinking-generator demo: first bits, period, balance, complexity.
    {
        ShrinkingGenerator sg(Lfsr(p1c, parse_bits("100")), Lfsr(p1, parse_bits("1000")));
        BitSeq ks = sg.generate(180);
        check("shrunken-first-bits", format_bits(BitSeq(ks.begin(), ks.begin() + 8)) == "01011011");
        auto per = seq_period(ks);
        check("shrunken-period", per && *per == 60);
        std::size_t ones = 0;
        for (std::size_t i = 0; i < 60; ++i) ones += ks[i];
        check("shrunken-balance", ones == 32);
        BmResult bm = berlekamp_massey(ks);
        check("shrunken-complexity", bm.lc == 16 && bm.lc > 8);
        check("shrunken-annihilator-power",
              minimal_polynomial_of_seq(ks) == BitPoly::parse("1+D+D^4").pow(4));
    }

    // Forecast from parameters alone.
    {
        SgPrediction f = sg_predict(3, 4, p1);
        check("forecast-period-60", f.period == 60);
        check("forecast-ones-32", f.ones_per_period == 32);
        check("forecast-lc-bracket", f.lc_lower == 8 && f.lc_upper == 16);
        check("forecast-coset-quartic", f.p == BitPoly::parse("1+D+D^4"));
        SgPrediction g = sg_predict(2, 5, p2);
        check("forecast-period-62", g.period == 62 && g.ones_per_period == 32);
        check("forecast-coset-quintic", g.p == BitPoly::parse("1+D^2+D^5"));
    }

    // Automaton modeling chain for the main demo.
    {
        BitPoly p = coset_polynomial(p2, 2);
        check("coset-polynomial", p == BitPoly::parse("1+D^2+D^5"));
        auto [a, b] = synthesize_ca(p);
        check("synthesized-pair", a.text() == "01111" && b.text() == "11110");
        auto [ea, eb] = model_sg(2, p2);
        check("expanded-pair", ea.text() == "0111001110" && eb.text() == "1111111111");
        check("expanded-charpoly",
              ca_charpoly(ea) == BitPoly::parse("1+D^4+D^10") &&
                  BitPoly::parse("1+D^4+D^10") == p.squared());
    }

    // Reconstruction from the documented 62-bit stream read at cell 10.
    {
        RuleVector rv("0111001110");
        BitSeq stream = parse_bits(table62);
        BitSeq window(stream.begin(), stream.begin() + 10);
        CaState state = recover_state(rv, window);
        check("recovered-state", format_bits(state) == "0001110110");
        check("one-step", format_bits(ca_step(rv, state)) == "0010010001");
        BitSeq again = cell_trace(rv, state, 10, 62);
        check("regenerated-stream", again == stream);
        AttackReport report = attack_sg(2, p2, BitSeq(stream.begin(), stream.begin() + 12), 62);
        check("attack-from-12-bits", report.ca_rules == "0111001110" &&
                                         format_bits(report.state) == "0001110110" &&
                                         report.bits_required == 10 &&
                                         format_bits(report.keystream) == table62);
        check("stream-annihilated", verify_annihilator(stream, BitPoly::parse("1+D^2+D^5"), 2));
    }

    // Phase relations of the ten-cell companion automaton.
    {
        RuleVector rv("0011001100");
        BitPoly m = ca_charpoly(rv);
        check("companion-charpoly", m == BitPoly::parse("1+D^2+D^6+D^8+D^10") &&
                                        m == BitPoly::parse("1+D+D^3+D^4+D^5").squared());
        std::vector<BitPoly> pi = transfer_polynomials(rv);
        check("transfer-poly-samples", pi[9] == BitPoly::parse("D") &&
                                           pi[8] == BitPoly::parse("1+D^2") &&
                                           pi[4] == BitPoly::parse("D^6") &&
                                           pi[1] == BitPoly::parse("1+D+D^2+D^3+D^4+D^9"));
        check("shift-log-26",
              shift_log(BitPoly::parse("1+D^2"), m) == std::optional<std::uint64_t>(26));
        check("power-identity-26", poly_pow_mod(BitPoly::monomial(1), 26, m) == BitPoly::parse("1+D^2"));
        // The reciprocal-factor variant of the same identity, pinned as well.
        check("power-identity-7", poly_pow_mod(BitPoly::monomial(1), 7,
                                               BitPoly::parse("1+D+D^2+D^4+D^5")) ==
                                      BitPoly::parse("1+D^2"));
        PhaseReport rep = phase_report(rv);
        bool classesOk = rep.classes.size() == 4;
        if (classesOk) {
            auto find_class_of = [&](std::size_t cell) -> const PhaseClass* {
                for (const PhaseClass& c : rep.classes)
                    for (const auto& [mc, sh] : c.members)
                        if (mc == cell) return &c;
                return nullptr;
            };
            const PhaseClass* c1 = find_class_of(1);
            const PhaseClass* c10 = find_class_of(10);
            auto shift_of = [](const PhaseClass* c, std::size_t cell) -> std::int64_t {
                for (const auto& [mc, sh] : c->members)
                    if (mc == cell) return static_cast<std::int64_t>(sh);
                return -1;
            };
            classesOk = c1 && c10 && c1->reference == 1 && c10->reference == 10 &&
                        shift_of(c1, 1) == 0 && shift_of(c1, 2) == 1 && shift_of(c1, 3) == 26 &&
                        shift_of(c1, 7) == 6 && shift_of(c10, 10) == 0 && shift_of(c10, 9) == 1 &&
                        shift_of(c10, 8) == 26 && shift_of(c10, 4) == 6 &&
                        rep.unmatched == std::vector<std::size_t>{5, 6};
        }
        check("phase-classes", classesOk);
    }

    if (failures == 0)
        std::cout << "all reference checks passed\n";
    else
        std::cout << failures << " reference check(s) failed\n";
    return failures;
}

// ---------------------------------------------------------------------------

std::string poly_to_text(const BitPoly& p) { return p.text(); }

ordered_json attack_report_json(const AttackReport& r) {
    ordered_json j;
    j["ca_rules"] = r.ca_rules;
    j["orientation"] = r.orientation;
    j["variant"] = r.variant;
    j["p_used"] = poly_to_text(r.p_used);
    j["state"] = format_bits(r.state);
    j["bits_required"] = r.bits_required;
    j["bm_equivalent"] = r.bm_equivalent;
    j["degenerate"] = r.degenerate;
    if (!r.keystream.empty()) j["keystream"] = format_bits(r.keystream);
    return j;
}

ordered_json phase_report_json(const PhaseReport& r) {
    ordered_json j;
    j["charpoly"] = poly_to_text(r.charpoly);
    j["classes"] = ordered_json::array();
    for (const PhaseClass& c : r.classes) {
        ordered_json jc;
        jc["reference"] = c.reference;
        jc["members"] = ordered_json::array();
        for (const auto& [cell, shift] : c.members)
            jc["members"].push_back(ordered_json{{"cell", cell}, {"shift", shift}});
        j["classes"].push_back(std::move(jc));
    }
    j["unmatched"] = r.unmatched;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Workbench for shrunken-LFSR keystream analysis with linear 90/150 "
        "null-boundary cellular automata"};
    app.require_subcommand(1);

    // -- lfsr ----------------------------------------------------------------
    std::string lfsrPoly, lfsrSeed;
    std::int64_t lfsrCount = 0;
    CLI::App* cmdLfsr = app.add_subcommand("lfsr", "Run a Fibonacci LFSR");
    cmdLfsr->add_option("--poly", lfsrPoly, "Feedback polynomial (1+D+D^3 or 0xb)")->required();
    cmdLfsr->add_option("--seed", lfsrSeed, "Initial register contents s_1..s_L")->required();
    cmdLfsr->add_option("-n,--count", lfsrCount, "Number of output bits")->required();

    // -- sg ------------------------------------------------------------------
    std::string sgP1, sgSeed1, sgP2, sgSeed2;
    std::int64_t sgCount = 0;
    bool sgPredict = false;
    CLI::App* cmdSg = app.add_subcommand("sg", "Run a shrinking generator");
    cmdSg->add_option("--p1", sgP1, "Control register feedback polynomial")->required();
    cmdSg->add_option("--seed1", sgSeed1, "Control register seed")->required();
    cmdSg->add_option("--p2", sgP2, "Data register feedback polynomial")->required();
    cmdSg->add_option("--seed2", sgSeed2, "Data register seed")->required();
    cmdSg->add_option("-n,--count", sgCount, "Number of keystream bits")->required();
    cmdSg->add_flag("--predict", sgPredict,
                    "Also print the structural forecast (period, balance, complexity bracket, "
                    "annihilator factor) as JSON");

    // -- model ---------------------------------------------------------------
    std::int64_t modelL1 = 0;
    std::string modelP2;
    bool modelJson = false;
    CLI::App* cmdModel = app.add_subcommand(
        "model", "Build the equivalent automaton pair for given generator parameters");
    cmdModel->add_option("--l1", modelL1, "Control register length")->required();
    cmdModel->add_option("--p2", modelP2, "Data register feedback polynomial")->required();
    cmdModel->add_flag("--json", modelJson, "Machine-readable output");

    // -- ca-run --------------------------------------------------------------
    std::string caRules, caState;
    std::int64_t caCount = -1, caCell = 0;
    bool caTriangle = false;
    CLI::App* cmdCa = app.add_subcommand("ca-run", "Evolve an automaton or invert a window");
    cmdCa->add_option("--rules", caRules, "Rule vector, one character per cell ('0'/'1')")
        ->required();
    cmdCa->add_option("--state", caState,
                      "Initial automaton state; with --triangle, the observed last-cell window")
        ->required();
    cmdCa->add_option("-n,--count", caCount, "Number of time steps to print");
    CLI::Option* optCell =
        cmdCa->add_option("--cell", caCell, "Print only this cell's trace (1-based)");
    CLI::Option* optTriangle = cmdCa->add_flag(
        "--triangle", caTriangle, "Treat the state as a last-cell window and print the "
                                  "back-substitution triangle");
    optTriangle->excludes(optCell);

    // -- attack --------------------------------------------------------------
    std::int64_t atkL1 = 0, atkHorizon = 0;
    std::string atkP2, atkWindow;
    bool atkJson = false;
    CLI::App* cmdAttack = app.add_subcommand(
        "attack", "Reconstruct keystream from an intercepted window with known parameters");
    cmdAttack->add_option("--l1", atkL1, "Control register length")->required();
    cmdAttack->add_option("--p2", atkP2, "Data register feedback polynomial")->required();
    cmdAttack->add_option("--window", atkWindow, "Intercepted keystream bits")->required();
    cmdAttack->add_option("--horizon", atkHorizon,
                          "Also emit this many keystream bits from the window start");
    cmdAttack->add_flag("--json", atkJson, "Machine-readable output");

    // -- phaseshift ----------------------------------------------------------
    std::string psRules;
    bool psJson = false;
    CLI::App* cmdPhase = app.add_subcommand(
        "phaseshift", "Report shift-equivalence classes of the automaton's cell sequences");
    cmdPhase->add_option("--rules", psRules, "Rule vector, one character per cell")->required();
    cmdPhase->add_flag("--json", psJson, "Machine-readable output");

    // -- bm ------------------------------------------------------------------
    std::string bmSeq;
    bool bmJson = false;
    CLI::App* cmdBm = app.add_subcommand("bm", "Linear complexity of a bit sequence");
    cmdBm->add_option("--seq", bmSeq, "Bit sequence, leftmost bit first")->required();
    cmdBm->add_flag("--json", bmJson, "Machine-readable output");

    // -- verify --------------------------------------------------------------
    CLI::App* cmdVerify =
        app.add_subcommand("verify", "Run the built-in worked-example checks");
    cmdVerify->alias("verify-paper");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the diagnostic
        return 2;
    }

    try {
        if (cmdLfsr->parsed()) {
            if (lfsrCount < 0) throw std::invalid_argument("count must be nonnegative");
            Lfsr reg(BitPoly::parse(lfsrPoly), parse_bits(lfsrSeed));
            std::cout << format_bits(reg.generate(static_cast<std::size_t>(lfsrCount))) << "\n";
        } else if (cmdSg->parsed()) {
            if (sgCount < 0) throw std::invalid_argument("count must be nonnegative");
            Lfsr control(BitPoly::parse(sgP1), parse_bits(sgSeed1));
            Lfsr data(BitPoly::parse(sgP2), parse_bits(sgSeed2));
            unsigned l1 = control.length(), l2 = data.length();
            ShrinkingGenerator gen(std::move(control), std::move(data));
            std::cout << format_bits(gen.generate(static_cast<std::size_t>(sgCount))) << "\n";
            if (sgPredict) {
                SgPrediction f = sg_predict(l1, l2, BitPoly::parse(sgP2));
                ordered_json j;
                j["T"] = f.period;
                j["ones"] = f.ones_per_period;
                j["lc_lower"] = f.lc_lower;
                j["lc_upper"] = f.lc_upper;
                j["P"] = poly_to_text(f.p);
                j["N_range"] = {f.n_lower, f.n_upper};
                std::cout << j.dump() << "\n";
            }
        } else if (cmdModel->parsed()) {
            if (modelL1 < 1) throw std::invalid_argument("L1 must be at least 1");
            BitPoly p2 = BitPoly::parse(modelP2);
            auto [a, b] = model_sg(static_cast<unsigned>(modelL1), p2);
            if (modelJson) {
                BitPoly p = coset_polynomial(p2, static_cast<unsigned>(modelL1));
                BitPoly want = p.pow(std::uint64_t{1} << (modelL1 - 1));
                ordered_json j;
                j["P"] = poly_to_text(p);
                j["rules_a"] = a.text();
                j["rules_b"] = b.text();
                j["length"] = a.size();
                j["charpoly_check"] = ca_charpoly(a) == want && ca_charpoly(b) == want;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << a.text() << "\n" << b.text() << "\n";
            }
        } else if (cmdCa->parsed()) {
            RuleVector rv(caRules);
            if (caTriangle) {
                auto rows = recover_triangle(rv, parse_bits(caState));
                for (std::size_t t = 0; t < rows.size(); ++t)
                    std::cout << std::string(t, ' ') << format_bits(rows[t]) << "\n";
            } else if (caCell > 0) {
                if (caCount < 0) throw std::invalid_argument("count must be nonnegative");
                std::cout << format_bits(cell_trace(rv, parse_bits(caState),
                                                    static_cast<std::size_t>(caCell),
                                                    static_cast<std::size_t>(caCount)))
                          << "\n";
            } else {
                if (caCount < 0) throw std::invalid_argument("count must be nonnegative");
                CaState s = parse_bits(caState);
                for (std::int64_t t = 0; t < caCount; ++t) {
                    std::cout << format_bits(s) << "\n";
                    if (t + 1 < caCount) s = ca_step(rv, s);
                }
            }
        } else if (cmdAttack->parsed()) {
            if (atkL1 < 1) throw std::invalid_argument("L1 must be at least 1");
            if (atkHorizon < 0) throw std::invalid_argument("horizon must be nonnegative");
            AttackReport r = attack_sg(static_cast<unsigned>(atkL1), BitPoly::parse(atkP2),
                                       parse_bits(atkWindow),
                                       static_cast<std::size_t>(atkHorizon));
            if (atkJson) {
                std::cout << attack_report_json(r).dump() << "\n";
            } else {
                std::cout << "rules: " << r.ca_rules << "\n"
                          << "orientation: " << r.orientation << "\n"
                          << "variant: " << r.variant << "\n"
                          << "p: " << poly_to_text(r.p_used) << "\n"
                          << "state: " << format_bits(r.state) << "\n"
                          << "bits_required: " << r.bits_required << "\n"
                          << "bm_equivalent: " << r.bm_equivalent << "\n";
                if (r.degenerate) std::cout << "degenerate stream\n";
                if (!r.keystream.empty())
                    std::cout << "keystream: " << format_bits(r.keystream) << "\n";
            }
        } else if (cmdPhase->parsed()) {
            PhaseReport r = phase_report(RuleVector(psRules));
            if (psJson) {
                std::cout << phase_report_json(r).dump() << "\n";
            } else {
                std::cout << "charpoly: " << poly_to_text(r.charpoly) << "\n";
                for (const PhaseClass& c : r.classes) {
                    std::cout << "class ref=" << c.reference << ":";
                    for (const auto& [cell, shift] : c.members)
                        std::cout << " " << cell << "(+" << shift << ")";
                    std::cout << "\n";
                }
                std::cout << "unmatched:";
                for (std::size_t cell : r.unmatched) std::cout << " " << cell;
                std::cout << "\n";
            }
        } else if (cmdBm->parsed()) {
            BmResult r = berlekamp_massey(parse_bits(bmSeq));
            if (bmJson) {
                ordered_json j;
                j["lc"] = r.lc;
                j["connection"] = poly_to_text(r.connection);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "lc: " << r.lc << "\n"
                          << "connection: " << poly_to_text(r.connection) << "\n";
            }
        } else if (cmdVerify->parsed()) {
            return run_reference_checks() == 0 ? 0 : 1;
        }
    } catch (const AnalysisError& e) {
        std::cerr << "analysis error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
