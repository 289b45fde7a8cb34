// Command-line front end: every library operation behind a subcommand with
// JSON input/output.  One JSON document per invocation on stdout; errors
// are {"code":…,"message":…} with a matching exit code (1 malformed input,
// 2 precondition violation, 3 failed verification).

#include "k1witt/serialize.hpp"
#include "k1witt/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using k1witt::Json;

constexpr int kExitMalformed = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitVerifyFailed = 3;

unsigned resolve_precision(const std::optional<unsigned>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("K1WITT_PREC")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1u << 20) {
            return static_cast<unsigned>(v);
        }
        throw std::invalid_argument("K1WITT_PREC is not a valid precision");
    }
    return k1witt::kDefaultPrecision;
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

k1witt::SphereElement parse_element(const std::string& text, std::uint32_t p,
                                    unsigned precision) {
    std::size_t i = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i < text.size() && (text[i] == '{' || text[i] == '[')) {
        return k1witt::sphere_from_json(Json::parse(text), p, precision);
    }
    return k1witt::sphere_from_string(text, p, precision);
}

struct GramArgs {
    std::int64_t ell = 0;
    std::string gram;

    k1witt::GramForm form() const {
        return k1witt::gram_from_json(Json::parse(gram), prime());
    }
    k1witt::Prime prime() const {
        if (ell < 3) {
            throw k1witt::precondition_error("--l must be an odd prime >= 3");
        }
        return k1witt::Prime(static_cast<std::uint32_t>(ell));
    }
};

Json verify_report(const std::vector<k1witt::verify::SuiteResult>& suites,
                   std::uint64_t seed) {
    Json out;
    out["seed"] = seed;
    Json jsuites = Json::array();
    bool all_ok = true;
    for (const auto& s : suites) {
        Json js;
        js["name"] = s.name;
        Json checks = Json::array();
        int failed = 0;
        for (const auto& c : s.checks) {
            Json jc;
            jc["name"] = c.name;
            jc["ok"] = c.passed;
            if (!c.passed) {
                jc["detail"] = c.detail;
                ++failed;
            }
            checks.push_back(std::move(jc));
        }
        js["checks"] = std::move(checks);
        js["failed"] = failed;
        all_ok = all_ok && failed == 0;
        jsuites.push_back(std::move(js));
    }
    out["suites"] = std::move(jsuites);
    out["ok"] = all_ok;
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Grothendieck-Witt classes over F_ell, equivariant "
                 "integration, and degree-zero K(1)-local arithmetic"};
    app.require_subcommand(1);

    // ---- ff ----------------------------------------------------------------
    auto* ff = app.add_subcommand("ff", "prime field arithmetic");
    ff->require_subcommand(1);
    auto* sqclass = ff->add_subcommand("sqclass", "square class of a residue");
    std::int64_t sq_ell = 0, sq_x = 0;
    sqclass->add_option("--l", sq_ell, "odd prime modulus")->required();
    sqclass->add_option("--x", sq_x, "residue")->required();

    // ---- gw ----------------------------------------------------------------
    auto* gw = app.add_subcommand("gw", "symmetric bilinear forms");
    gw->require_subcommand(1);

    GramArgs classify_args;
    auto* classify = gw->add_subcommand("classify", "rank and determinant class");
    classify->add_option("--l", classify_args.ell, "odd prime")->required();
    classify->add_option("--gram", classify_args.gram, "Gram matrix JSON")
        ->required();

    GramArgs diag_args;
    auto* diag = gw->add_subcommand("diag", "congruence diagonalization");
    diag->add_option("--l", diag_args.ell, "odd prime")->required();
    diag->add_option("--gram", diag_args.gram, "Gram matrix JSON")->required();

    auto* equiv = gw->add_subcommand("equiv", "equivalence of two forms");
    std::int64_t eq_ell = 0;
    std::string equiv_a, equiv_b;
    bool equiv_brute = false;
    equiv->add_option("--l", eq_ell, "odd prime")->required();
    equiv->add_option("--a", equiv_a, "first Gram matrix JSON")->required();
    equiv->add_option("--b", equiv_b, "second Gram matrix JSON")->required();
    equiv->add_flag("--brute", equiv_brute,
                    "use the brute-force oracle instead of invariants");

    // ---- eq ----------------------------------------------------------------
    auto* eq = app.add_subcommand("eq", "equivariant forms and integration");
    eq->require_subcommand(1);

    auto* push = eq->add_subcommand("push", "integrate a form over BG");
    std::int64_t push_ell = 0;
    std::string push_group, push_rep, push_gram;
    push->add_option("--l", push_ell, "odd prime")->required();
    push->add_option("--group", push_group, "group JSON")->required();
    push->add_option("--rep", push_rep, "matrix list JSON")->required();
    push->add_option("--gram", push_gram, "Gram matrix JSON")->required();

    auto* eqcard = eq->add_subcommand("card", "class of the integral of <1>");
    std::int64_t eqcard_ell = 0;
    std::string eqcard_group;
    eqcard->add_option("--l", eqcard_ell, "odd prime")->required();
    eqcard->add_option("--group", eqcard_group, "group JSON")->required();

    GramArgs alpha2_args;
    auto* alpha2 = eq->add_subcommand("alpha2", "integrated symmetric square");
    alpha2->add_option("--l", alpha2_args.ell, "odd prime")->required();
    alpha2->add_option("--gram", alpha2_args.gram, "Gram matrix JSON")
        ->required();

    // ---- k1 ----------------------------------------------------------------
    auto* k1 = app.add_subcommand("k1", "degree-zero K(1)-local arithmetic");
    k1->require_subcommand(1);
    std::optional<unsigned> prec_flag;

    auto* card = k1->add_subcommand("card", "cardinality of a pi-finite space");
    std::int64_t card_p = 0;
    std::string card_space;
    card->add_option("--p", card_p, "prime")->required();
    card->add_option("--space", card_space, "space JSON")->required();
    card->add_option("--prec", prec_flag, "tracked p-adic digits");

    struct ElementCmd {
        CLI::App* cmd = nullptr;
        std::int64_t p = 0;
        std::string x;
    };
    ElementCmd alpha_cmd, delta_cmd, theta_cmd, log_cmd;
    for (auto [name, desc, slot] :
         {std::tuple{"alpha", "power operation alpha_p", &alpha_cmd},
          std::tuple{"delta", "p-derivation delta_p", &delta_cmd},
          std::tuple{"theta", "power operation theta", &theta_cmd},
          std::tuple{"log", "logarithm of a unit", &log_cmd}}) {
        slot->cmd = k1->add_subcommand(name, desc);
        slot->cmd->add_option("--p", slot->p, "prime")->required();
        slot->cmd->add_option("--x", slot->x, "element (\"a\", \"a+e\" or JSON)")
            ->required();
        slot->cmd->add_option("--prec", prec_flag, "tracked p-adic digits");
    }

    auto* nu_cmd = k1->add_subcommand("nu", "comparison map from form classes");
    std::int64_t nu_ell = 0, nu_rank = 0, nu_e = 0;
    nu_cmd->add_option("--l", nu_ell, "prime = 3,5 mod 8")->required();
    nu_cmd->add_option("--rank", nu_rank, "virtual rank")->required();
    nu_cmd->add_option("--e", nu_e, "torsion bit")->required();
    nu_cmd->add_option("--prec", prec_flag, "tracked p-adic digits");

    auto* encard = k1->add_subcommand("encard", "module cardinality of B^k C_p");
    std::int64_t en_n = 0, en_k = 0, en_p = 0;
    encard->add_option("--n", en_n, "height >= 1")->required();
    encard->add_option("--k", en_k, "delooping count")->required();
    encard->add_option("--p", en_p, "prime")->required();

    // ---- verify ------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "run the oracle suites");
    std::string suite_name = "all";
    std::uint64_t seed = 20829;
    verify_cmd->add_option("--suite", suite_name, "fields|forms|equivariant|padic|k1|all");
    verify_cmd->add_option("--seed", seed, "generator seed");

    try {
        app.parse(argc, argv);

        if (*sqclass) {
            k1witt::Prime ell(static_cast<std::uint32_t>(sq_ell));
            Json out;
            out["class"] = k1witt::square_class(k1witt::Residue(sq_x, ell));
            emit(out);
        } else if (*classify) {
            emit(k1witt::gwclass_to_json(k1witt::class_of(classify_args.form())));
        } else if (*diag) {
            const k1witt::GramForm f = diag_args.form();
            const k1witt::Diagonalization d = k1witt::diagonalize(f);
            Json out;
            Json entries = Json::array();
            for (const auto& r : d.diagonal) entries.push_back(r.value());
            out["diag"] = std::move(entries);
            Json basis = Json::array();
            for (std::size_t i = 0; i < d.basis.rows(); ++i) {
                Json row = Json::array();
                for (std::size_t j = 0; j < d.basis.cols(); ++j) {
                    row.push_back(d.basis.at(i, j).value());
                }
                basis.push_back(std::move(row));
            }
            out["basis"] = std::move(basis);
            emit(out);
        } else if (*equiv) {
            const k1witt::Prime ell(static_cast<std::uint32_t>(eq_ell));
            const k1witt::GramForm a =
                k1witt::gram_from_json(Json::parse(equiv_a), ell);
            const k1witt::GramForm b =
                k1witt::gram_from_json(Json::parse(equiv_b), ell);
            Json out;
            out["equivalent"] = equiv_brute ? k1witt::brute_force_equivalent(a, b)
                                            : k1witt::equivalent(a, b);
            emit(out);
        } else if (*push) {
            const k1witt::Prime ell(static_cast<std::uint32_t>(push_ell));
            const k1witt::FiniteGroup g =
                k1witt::group_from_json(Json::parse(push_group));
            const k1witt::Representation rep =
                k1witt::rep_from_json(Json::parse(push_rep), g, ell);
            const k1witt::GramForm gram =
                k1witt::gram_from_json(Json::parse(push_gram), ell);
            const k1witt::GramForm pushed =
                k1witt::pushforward(k1witt::EquivariantForm(rep, gram));
            Json out;
            out["gram"] = k1witt::gram_to_json(pushed);
            emit(out);
        } else if (*eqcard) {
            const k1witt::Prime ell(static_cast<std::uint32_t>(eqcard_ell));
            const k1witt::FiniteGroup g =
                k1witt::group_from_json(Json::parse(eqcard_group));
            emit(k1witt::gwclass_to_json(k1witt::cardinality_via_forms(g, ell)));
        } else if (*alpha2) {
            Json out;
            out["gram"] =
                k1witt::gram_to_json(k1witt::alpha2_forms(alpha2_args.form()));
            emit(out);
        } else if (*card) {
            const unsigned prec = resolve_precision(prec_flag);
            const k1witt::PiFiniteSpace space = k1witt::space_from_json(
                Json::parse(card_space), static_cast<std::uint32_t>(card_p));
            emit(k1witt::sphere_to_json(k1witt::k1_cardinality(space, prec)));
        } else if (alpha_cmd.cmd && *alpha_cmd.cmd) {
            const unsigned prec = resolve_precision(prec_flag);
            emit(k1witt::sphere_to_json(k1witt::alpha(parse_element(
                alpha_cmd.x, static_cast<std::uint32_t>(alpha_cmd.p), prec))));
        } else if (delta_cmd.cmd && *delta_cmd.cmd) {
            const unsigned prec = resolve_precision(prec_flag);
            emit(k1witt::sphere_to_json(k1witt::delta(parse_element(
                delta_cmd.x, static_cast<std::uint32_t>(delta_cmd.p), prec))));
        } else if (theta_cmd.cmd && *theta_cmd.cmd) {
            const unsigned prec = resolve_precision(prec_flag);
            emit(k1witt::sphere_to_json(k1witt::theta(parse_element(
                theta_cmd.x, static_cast<std::uint32_t>(theta_cmd.p), prec))));
        } else if (log_cmd.cmd && *log_cmd.cmd) {
            const unsigned prec = resolve_precision(prec_flag);
            emit(k1witt::sphere_to_json(k1witt::rezk_log(parse_element(
                log_cmd.x, static_cast<std::uint32_t>(log_cmd.p), prec))));
        } else if (*nu_cmd) {
            const unsigned prec = resolve_precision(prec_flag);
            if (nu_e != 0 && nu_e != 1) {
                throw std::invalid_argument("--e must be 0 or 1");
            }
            emit(k1witt::k1_to_json(k1witt::nu(
                k1witt::GWClass{nu_rank, static_cast<int>(nu_e)},
                k1witt::Prime(static_cast<std::uint32_t>(nu_ell)), prec)));
        } else if (*encard) {
            if (en_n < 1 || en_k < 0 || en_p < 2) {
                throw std::invalid_argument("need --n >= 1, --k >= 0, --p prime");
            }
            Json out;
            out["value"] = k1witt::en_module_cardinality(
                                 static_cast<unsigned>(en_n),
                                 static_cast<unsigned>(en_k),
                                 static_cast<std::uint32_t>(en_p))
                               .str();
            emit(out);
        } else if (*verify_cmd) {
            std::vector<k1witt::verify::SuiteResult> suites;
            if (suite_name == "all") {
                suites = k1witt::verify::run_all(seed);
            } else {
                suites.push_back(k1witt::verify::run_suite(suite_name, seed));
            }
            const Json report = verify_report(suites, seed);
            emit(report);
            return report["ok"].get<bool>() ? 0 : kExitVerifyFailed;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help and friends
        }
        Json err;
        err["code"] = kExitMalformed;
        err["message"] = e.what();
        emit(err);
        return kExitMalformed;
    } catch (const k1witt::precondition_error& e) {
        Json err;
        err["code"] = kExitPrecondition;
        err["message"] = e.what();
        emit(err);
        return kExitPrecondition;
    } catch (const Json::exception& e) {
        Json err;
        err["code"] = kExitMalformed;
        err["message"] = e.what();
        emit(err);
        return kExitMalformed;
    } catch (const std::invalid_argument& e) {
        Json err;
        err["code"] = kExitMalformed;
        err["message"] = e.what();
        emit(err);
        return kExitMalformed;
    }
}
