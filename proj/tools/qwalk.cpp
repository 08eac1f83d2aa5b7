// qwalk: certify non-D-finiteness of quarter-plane excursion generating
// functions. Subcommands: classify, enumerate, eliminants, check-tables.

#include <CLI11.hpp>
#include <iostream>

#include "qwalk/elim.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/report.hpp"

using namespace qwalk;

int main(int argc, char** argv) {
    CLI::App app{"exact classification of quarter-plane excursion sequences"};
    app.require_subcommand(1);

    std::string steps_text, format = "text";
    long max_n = 8, fit_n = 0, precision = kDefaultStartPrec;
    bool use_float = false;

    auto* cls = app.add_subcommand("classify", "run the full pipeline");
    cls->add_option("--steps", steps_text, "step set, e.g. \"(1,0),(0,1),(-1,-1)\"")
        ->required();
    cls->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cls->add_option("--max-n", max_n, "exact excursion terms to report");
    cls->add_option("--fit-n", fit_n, "run the non-certified asymptotic fit to N");
    cls->add_option("--precision", precision, "starting precision in bits");

    auto* enu = app.add_subcommand("enumerate", "excursion counts only");
    enu->add_option("--steps", steps_text)->required();
    enu->add_option("--max-n", max_n)->required();
    enu->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    enu->add_flag("--float", use_float, "rescaled double-precision backend");
    enu->add_flag("--exact", [](int64_t) {}, "exact backend (default)");

    auto* eli = app.add_subcommand("eliminants", "eliminants of rho and c");
    eli->add_option("--steps", steps_text)->required();
    eli->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> tags;
    int table = 0;
    auto* chk = app.add_subcommand("check-tables", "regression-check the fixtures");
    chk->add_option("--table", table, "1 or 2 (default both)")
        ->check(CLI::IsMember({1, 2}));
    chk->add_option("--tags", tags, "tag filter, e.g. 23 or \"(40,42)\"");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cls->parsed()) {
            ClassifyOptions opt;
            opt.precision = precision;
            opt.max_n = max_n;
            opt.fit_n = fit_n;
            ClassificationReport r = classify(parse_stepset(steps_text), opt);
            if (format == "json")
                std::cout << r.to_json().dump(2) << "\n";
            else
                std::cout << r.to_text();
            return r.exit_code();
        }
        if (enu->parsed()) {
            StepSet s = parse_stepset(steps_text);
            if (use_float) {
                Verdict v = non_dfinite_verdict(s);
                if (!v.rho) {
                    std::cerr << "error: no certified rho for rescaling: "
                              << v.diagnostic << "\n";
                    return 3;
                }
                double rho_mid = v.rho->to_interval(128).mid_d();
                auto seq = count_excursions_float(s, max_n, rho_mid);
                if (format == "json")
                    std::cout << nlohmann::json(seq).dump() << "\n";
                else
                    for (double x : seq) std::cout << x << "\n";
            } else {
                ExcursionSeq seq = count_excursions(s, max_n);
                if (format == "json") {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& t : seq.terms) arr.push_back(t.get_str());
                    std::cout << arr.dump() << "\n";
                } else
                    for (const auto& t : seq.terms) std::cout << t.get_str() << "\n";
            }
            return 0;
        }
        if (eli->parsed()) {
            StepSet s = parse_stepset(steps_text);
            Eliminant er = eliminant_rho(s);
            Eliminant ec = eliminant_c(s);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["rho"] = {{"poly", format_poly(er.poly)},
                            {"provenance", er.provenance}};
                j["c"] = {{"poly", format_poly(ec.poly)},
                          {"provenance", ec.provenance}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "E_rho = " << format_poly(er.poly) << "\n";
                std::cout << "E_c   = " << format_poly(ec.poly) << "\n";
            }
            return 0;
        }
        if (chk->parsed()) {
            bool ok = true;
            for (int t : {1, 2}) {
                if (table && t != table) continue;
                TableCheck res = check_tables(t, tags);
                std::cout << "table " << t << ": " << res.passed << "/"
                          << res.checked << " passed\n";
                for (const auto& f : res.failures) std::cout << "  FAIL " << f << "\n";
                ok = ok && res.failures.empty();
            }
            return ok ? 0 : 3;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const InvalidStep& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const HalfPlaneConfined& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 4;
}
