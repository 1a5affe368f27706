#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "shiftlab/alcove.hpp"
#include "shiftlab/characters.hpp"
#include "shiftlab/config.hpp"
#include "shiftlab/json_io.hpp"

using namespace shiftlab;

namespace {

struct RunConfig {
    std::string algebra = "A1";
    std::string variant = "nonsuper";
    int m = 2;
    std::string alpha = "0";
    std::string lambda;
    std::string kind;
    long order = 10;
    int height = 3;
    std::string format = "json";
    std::string output;
    int threads = 0;
    std::string caps;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ShiftCase make_cfg_case(const RunConfig& cfg) {
    return make_case(cfg.algebra, parse_variant(cfg.variant), cfg.m);
}

WeightVec parse_alpha(const std::string& text, int rank) {
    if (text == "0") return WeightVec(rank);
    std::vector<Rat> c;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) c.push_back(parse_rat(item));
    if (static_cast<int>(c.size()) != rank)
        throw std::invalid_argument("--alpha needs " + std::to_string(rank) + " simple-root coordinates");
    return WeightVec(std::move(c));
}

int lambda_index(const ShiftSystem& sys, const std::string& text) {
    if (text.empty()) {
        // lambda = 0: bullet 0, lambda_bullet = 0
        return sys.find(0, std::vector<long>(static_cast<size_t>(sys.rs().rank), 1));
    }
    LambdaParam lam = parse_lambda(sys.shift_case(), text);
    int l = sys.index_of(lam);
    if (l < 0) throw std::invalid_argument("lambda " + text + " is not in Lambda");
    return l;
}

CharKind cfg_kind(const RunConfig& cfg, const ShiftCase& c) {
    return cfg.kind.empty() ? default_kind(c) : parse_kind(cfg.kind);
}

class Output {
public:
    explicit Output(const RunConfig& cfg) : cfg_(cfg) {}
    void json(const Json& j) { text(j.dump(2) + "\n"); }
    void text(const std::string& s) {
        if (cfg_.output.empty()) {
            std::cout << s;
            return;
        }
        std::ofstream f(cfg_.output);
        if (!f) throw UsageError("cannot write " + cfg_.output);
        f << s;
    }

private:
    const RunConfig& cfg_;
};

std::string series_csv(const QSeries& s) {
    std::ostringstream os;
    os << "exponent,coefficient\n";
    for (const auto& [e, c] : s.terms()) os << rat_str(e) << ',' << c.get_str() << '\n';
    return os.str();
}

void emit_report(const RunConfig& cfg, const ShiftReport& r) {
    Output out(cfg);
    if (cfg.format == "csv") {
        out.text(report_csv(r));
    } else if (cfg.format == "plain") {
        std::ostringstream os;
        os << r.case_id << (r.ok() ? " ok" : " FAILED") << '\n';
        for (const auto& [k, v] : r.counts) os << "  " << k << ": " << v << '\n';
        for (const auto& f : r.failures) os << "  fail " << f.check << " at " << f.lambda << ": " << f.witness << '\n';
        out.text(os.str());
    } else {
        out.json(to_json(r));
    }
}

void emit_series(const RunConfig& cfg, Json head, const QSeries& s) {
    Output out(cfg);
    if (cfg.format == "csv") {
        out.text(series_csv(s));
    } else if (cfg.format == "plain") {
        out.text(s.str(40) + "\n");
    } else {
        head["series"] = to_json(s);
        out.json(head);
    }
}

int cmd_info(const RunConfig& cfg) {
    RootSystem rs = build_root_system(SimpleLieType::parse(cfg.algebra));
    Json j = to_json(rs);
    bool enumerable = rs.weyl_order <= caps().weyl;
    j["weyl_enumerated"] = enumerable;
    if (enumerable) {
        WeylGroup W(rs, caps().weyl);
        j["longest_length"] = W[W.longest()].length;
        Json word = Json::array();
        for (int i : W[W.longest()].word) word.push_back(i + 1);
        j["longest_word"] = word;
    }
    if (cfg.format == "plain") {
        std::ostringstream os;
        os << rs.lie_type.name() << " rank " << rs.rank << " |W| " << rs.weyl_order.get_str() << " h " << rs.coxeter
           << " h^v " << rs.dual_coxeter << " rho " << rs.rho.str() << " rho^v " << rs.rho_check.str() << '\n';
        Output(cfg).text(os.str());
        return 0;
    }
    Output(cfg).json(j);
    return 0;
}

int cmd_lambda(const RunConfig& cfg) {
    ShiftSystem sys(make_cfg_case(cfg), cfg.threads != 1);
    ShiftReport r = condition_report(sys, sys.have_all_words(), cfg.threads != 1);
    emit_report(cfg, r);
    return 0;
}

ShiftReport alcove_independence(const ShiftSystem& sys, int max_height) {
    const ShiftCase& c = sys.shift_case();
    Alcove A(sys);
    ShiftReport r;
    r.case_id = c.id();
    for (const auto& alpha : dominant_in_root_lattice(sys.rs(), max_height)) {
        std::map<int, std::pair<std::string, AffineWeylElt>> first;
        for (const auto& lam : sys.lambdas()) {
            if (!alcove_inequality(lam, c)) continue;
            YData y = A.y_alpha(alpha, lam);
            ++r.counts["reductions"];
            if (y.on_wall) ++r.counts["on-wall"];
            auto it = first.find(lam.bullet);
            if (it == first.end()) {
                first.emplace(lam.bullet, std::make_pair(lam.label(), y.y));
            } else if (!(it->second.second == y.y)) {
                r.failures.push_back({"lambda-independence", lam.label(),
                                      "alpha " + alpha.str() + ": " + A.str(y.y) + " vs " + A.str(it->second.second) + " at " +
                                          it->second.first});
            }
            if (family_of(c) == AlcoveFamily::Twisted) {
                ++r.counts["closed-form"];
                if (!(y.y == A.closed_form_corrected(alpha, lam)))
                    r.failures.push_back({"closed-form", lam.label(), "alpha " + alpha.str() + ": " + A.str(y.y)});
                if (!(y.y == A.closed_form(alpha, lam))) ++r.counts["closed-form-literal-mismatch"];
            }
        }
    }
    return r;
}

int cmd_check(const RunConfig& cfg, const std::string& suite) {
    ShiftSystem sys(make_cfg_case(cfg), cfg.threads != 1);
    ShiftReport r;
    if (suite == "axioms")
        r = verify_axioms(sys, cfg.threads != 1);
    else if (suite == "weak-strong")
        r = condition_report(sys, sys.have_all_words(), cfg.threads != 1);
    else if (suite == "shift-facts")
        r = shift_facts_report(sys);
    else if (suite == "alcove-independence")
        r = alcove_independence(sys, cfg.height);
    else
        throw UsageError("unknown check suite " + suite);
    emit_report(cfg, r);
    return r.ok() ? 0 : 1;
}

Json char_head(const ShiftSystem& sys, const std::string& alpha, int lam, const std::string& kind) {
    Json j;
    j["case"] = sys.shift_case().id();
    j["alpha"] = alpha;
    j["lambda"] = sys.lambdas()[static_cast<size_t>(lam)].label();
    j["kind"] = kind;
    return j;
}

int cmd_char(const RunConfig& cfg) {
    ShiftCase c = make_cfg_case(cfg);
    ShiftSystem sys(c, cfg.threads != 1);
    WeightVec alpha = parse_alpha(cfg.alpha, c.rs->rank);
    int lam = lambda_index(sys, cfg.lambda);
    CharKind kind = cfg_kind(cfg, c);
    if (!alcove_inequality(sys.lambdas()[static_cast<size_t>(lam)], c))
        std::cerr << "warning: lambda is outside the strong region; the formula is evaluated anyway\n";
    QSeries s = multiplet_char(sys, alpha, lam, kind, cfg.order);
    emit_series(cfg, char_head(sys, alpha.str(), lam, kind_name(kind)), s);
    return 0;
}

int cmd_ftchar(const RunConfig& cfg) {
    ShiftCase c = make_cfg_case(cfg);
    ShiftSystem sys(c, cfg.threads != 1);
    int lam = lambda_index(sys, cfg.lambda);
    CharKind kind = cfg_kind(cfg, c);
    if (!alcove_inequality(sys.lambdas()[static_cast<size_t>(lam)], c))
        std::cerr << "warning: lambda is outside the strong region; the formula is evaluated anyway\n";
    FtInfo info;
    QSeries s = ft_char(sys, lam, kind, cfg.order, &info);
    Json head = char_head(sys, "sum", lam, "ft");
    head["alphas_used"] = info.alphas_used;
    head["max_height"] = info.max_height;
    emit_series(cfg, head, s);
    return 0;
}

// lambda^bullet + sum n_j a_j with |n_j| <= box and beta + rho on a reflection hyperplane
std::vector<WeightVec> singular_points(const ShiftSystem& sys, const LambdaParam& lam, int box) {
    const RootSystem& rs = sys.rs();
    std::vector<WeightVec> out;
    std::vector<long> n(static_cast<size_t>(rs.rank), -box);
    for (;;) {
        WeightVec beta = lam.bullet_up;
        for (int j = 0; j < rs.rank; ++j) beta += Rat(n[static_cast<size_t>(j)]) * rs.simple_roots[static_cast<size_t>(j)];
        for (const auto& g : rs.positive_roots)
            if (rs.pairing(beta + rs.rho, g) == 0) {
                out.push_back(beta);
                break;
            }
        int j = 0;
        while (j < rs.rank && ++n[static_cast<size_t>(j)] > box) n[static_cast<size_t>(j++)] = -box;
        if (j == rs.rank) break;
    }
    return out;
}

int cmd_verify(const RunConfig& cfg, const std::string& target) {
    ShiftCase c = make_cfg_case(cfg);
    ShiftSystem sys(c, cfg.threads != 1);
    Json j;
    j["case"] = c.id();
    j["target"] = target;
    bool ok = true;
    if (target == "wchar") {
        int lam = lambda_index(sys, "");
        QSeries a = multiplet_char(sys, WeightVec(c.rs->rank), lam, CharKind::Ch, cfg.order);
        QSeries b = walg_vacuum_oracle(c, cfg.order).truncate(a.top());
        ok = a == b;
        j["formula"] = to_json(a);
        j["oracle"] = to_json(b);
    } else if (target == "verma") {
        if (!is_super(c.variant)) throw UsageError("verify verma needs a super variant");
        long checked = 0, bad = 0;
        for (int l = 0; l < sys.size(); ++l) {
            const LambdaParam& lam = sys.lambdas()[static_cast<size_t>(l)];
            for (const auto& alpha : dominant_in_root_lattice(sys.rs(), cfg.height)) {
                QSeries v = verma_char_super(c, Rat(c.p) * (lam.value - alpha), cfg.order);
                QSeries w = weight_space_char(sys, l, alpha + lam.bullet_up, CharKind::Ch, cfg.order);
                ++checked;
                if (v != w) ++bad;
            }
        }
        ok = bad == 0;
        j["checked"] = checked;
        j["mismatches"] = bad;
    } else if (target == "walls") {
        long walls = 0, nonzero = 0, antisym = 0, bad_antisym = 0;
        const WeylGroup& W = sys.weyl();
        for (int l = 0; l < sys.size(); ++l) {
            const LambdaParam& lam = sys.lambdas()[static_cast<size_t>(l)];
            for (const auto& beta : singular_points(sys, lam, 2)) {
                ++walls;
                if (!alternating_sum(sys, beta, l, CharKind::Ch).is_zero()) ++nonzero;
            }
            for (const auto& base : dominant_in_root_lattice(sys.rs(), cfg.height)) {
                WeightVec beta = base + lam.bullet_up;
                LatticeSum f = alternating_sum(sys, beta, l, CharKind::Ch);
                for (int t = 0; t < W.size(); ++t) {
                    LatticeSum g = alternating_sum(sys, W.dot(t, beta), l, CharKind::Ch);
                    ++antisym;
                    LatticeSum expect;
                    for (const auto& [e, n] : f.terms) expect.terms[e] = W[t].length % 2 ? BigInt(-n) : n;
                    if (!(g == expect)) ++bad_antisym;
                }
            }
        }
        ok = nonzero == 0 && bad_antisym == 0;
        j["wall_points"] = walls;
        j["nonzero_on_wall"] = nonzero;
        j["antisymmetry_checks"] = antisym;
        j["antisymmetry_failures"] = bad_antisym;
    } else {
        throw UsageError("unknown verify target " + target);
    }
    j["ok"] = ok;
    if (cfg.format == "plain")
        Output(cfg).text(c.id() + " " + target + (ok ? " ok\n" : " FAILED\n"));
    else
        Output(cfg).json(j);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shift systems, multiplet characters and alcove data"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, bool with_case) {
        sub->add_option("--algebra", cfg.algebra, "Dynkin type, e.g. A1, B2, G2");
        if (with_case) {
            sub->add_option("--variant", cfg.variant, "nonsuper | super | ramond")
                ->check(CLI::IsMember({"nonsuper", "super", "ramond"}));
            sub->add_option("--m", cfg.m, "level parameter m >= 1")->check(CLI::PositiveNumber);
        }
        sub->add_option("--format", cfg.format, "json | csv | plain")->check(CLI::IsMember({"json", "csv", "plain"}));
        sub->add_option("--output", cfg.output, "write to this file instead of stdout");
        sub->add_option("--threads", cfg.threads, "OpenMP threads (0 = runtime default, 1 = serial)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--caps", cfg.caps, "weyl=N,words=N,grid=N");
    };

    auto* info = app.add_subcommand("info", "root system data");
    common(info, false);
    auto* lambda = app.add_subcommand("lambda", "Lambda with weak/strong/alcove flags");
    common(lambda, true);

    std::string suite;
    auto* check = app.add_subcommand("check", "verification suites");
    common(check, true);
    check->add_option("suite", suite, "axioms | weak-strong | shift-facts | alcove-independence")
        ->required()
        ->check(CLI::IsMember({"axioms", "weak-strong", "shift-facts", "alcove-independence"}));
    check->add_option("--height", cfg.height, "largest height of alpha scanned")->check(CLI::NonNegativeNumber);

    auto* chr = app.add_subcommand("char", "multiplet character of W_{-alpha+lambda}");
    common(chr, true);
    chr->add_option("--alpha", cfg.alpha, "simple-root coordinates, comma separated, or 0");
    chr->add_option("--lambda", cfg.lambda, "minuscule index then digits, e.g. 0,1");
    chr->add_option("--kind", cfg.kind, "ch | sch | ramond")->check(CLI::IsMember({"ch", "sch", "ramond"}));
    chr->add_option("--order", cfg.order, "q-order past the leading term")->check(CLI::NonNegativeNumber);

    auto* ft = app.add_subcommand("ftchar", "full character summed over alpha");
    common(ft, true);
    ft->add_option("--lambda", cfg.lambda, "minuscule index then digits");
    ft->add_option("--kind", cfg.kind, "ch | sch | ramond")->check(CLI::IsMember({"ch", "sch", "ramond"}));
    ft->add_option("--order", cfg.order, "q-order past the vacuum")->check(CLI::NonNegativeNumber);

    std::string target;
    auto* verify = app.add_subcommand("verify", "compare formulas with oracles");
    common(verify, true);
    verify->add_option("target", target, "wchar | verma | walls")->required()->check(CLI::IsMember({"wchar", "verma", "walls"}));
    verify->add_option("--order", cfg.order, "q-order")->check(CLI::NonNegativeNumber);
    verify->add_option("--height", cfg.height, "largest height of alpha scanned")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Caps base = caps();
        if (const char* env = std::getenv("SHIFTLAB_CAPS")) base = parse_caps(env, base);
        if (!cfg.caps.empty()) base = parse_caps(cfg.caps, base);
        caps() = base;
        set_threads(cfg.threads);

        if (*info) return cmd_info(cfg);
        if (*lambda) return cmd_lambda(cfg);
        if (*check) return cmd_check(cfg, suite);
        if (*chr) return cmd_char(cfg);
        if (*ft) return cmd_ftchar(cfg);
        if (*verify) return cmd_verify(cfg, target);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return 2;
    } catch (const SizeError& e) {
        std::cerr << "size limit: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
