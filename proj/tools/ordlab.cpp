#include <CLI11.hpp>

#include <iostream>
#include <functional>
#include <sstream>
#include <string>

#include "ordlab/io.hpp"
#include "ordlab/obstacle.hpp"
#include "ordlab/scattered.hpp"
#include "ordlab/shift.hpp"

namespace {

using ordlab::json;

struct emitter {
    bool as_json = false;
    int status = 0;

    void emit(const std::string& command, json result, const std::string& text) {
        if (as_json) {
            json out{{"command", command}, {"result", std::move(result)}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << text << "\n";
        }
    }
};

std::string interval_text(const ordlab::derived_space& s) {
    if (!s) return "EMPTY";
    return "[0, " + ordlab::format(s->alpha) + "]";
}

json interval_json(const ordlab::derived_space& s) {
    if (!s) return nullptr;
    return json{{"alpha", ordlab::format(s->alpha)}};
}

std::string trace_text(const ordlab::derivation_trace& t) {
    std::ostringstream out;
    out << "epsilon " << ordlab::format(t.epsilon) << "\n";
    for (std::size_t s = 0; s < t.stages.size(); ++s) {
        out << "stage " << s << ":";
        for (int i : t.stages[s]) out << " " << i;
        out << "\n";
    }
    out << "ranks:";
    for (std::size_t i = 0; i < t.ranks.size(); ++i) {
        out << " " << i << "=";
        if (t.ranks[i])
            out << *t.ranks[i];
        else
            out << "stable";
    }
    out << "\nstabilized " << (t.stabilized ? "true" : "false");
    return out.str();
}

ordlab::rat positive_rational(const std::string& text) {
    ordlab::rat q = ordlab::parse_rational(text);
    if (q <= 0) throw ordlab::domain_error("eps must be positive");
    return q;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordlab: exact ordinal indices of C(K) spaces and a finite slice-derivation lab"};
    app.require_subcommand(1);
    emitter out;
    app.add_flag("--json", out.as_json, "emit one JSON object instead of text");

    using ordlab::format;
    using ordlab::ordinal;
    using ordlab::parse_ordinal;

    // ---- ord: ordinal calculator ----------------------------------------
    auto* ord = app.add_subcommand("ord", "ordinal arithmetic in Cantor normal form");
    ord->require_subcommand(1);
    static std::string arg_a, arg_b;

    auto ordinal_result = [&out](const std::string& command, const ordinal& v) {
        out.emit(command, format(v), format(v));
    };

    auto* ord_eval = ord->add_subcommand("eval", "parse and normalize an expression");
    ord_eval->add_option("expr", arg_a, "ordinal expression")->required();
    ord_eval->callback([&] { ordinal_result("ord eval", parse_ordinal(arg_a)); });

    auto* ord_add = ord->add_subcommand("add", "ordinal sum a + b");
    ord_add->add_option("a", arg_a)->required();
    ord_add->add_option("b", arg_b)->required();
    ord_add->callback(
        [&] { ordinal_result("ord add", add(parse_ordinal(arg_a), parse_ordinal(arg_b))); });

    auto* ord_mul = ord->add_subcommand("mul", "ordinal product a * b");
    ord_mul->add_option("a", arg_a)->required();
    ord_mul->add_option("b", arg_b)->required();
    ord_mul->callback(
        [&] { ordinal_result("ord mul", mul(parse_ordinal(arg_a), parse_ordinal(arg_b))); });

    auto* ord_cmp = ord->add_subcommand("cmp", "compare two ordinals (LT, EQ, GT)");
    ord_cmp->add_option("a", arg_a)->required();
    ord_cmp->add_option("b", arg_b)->required();
    ord_cmp->callback([&] {
        auto c = parse_ordinal(arg_a) <=> parse_ordinal(arg_b);
        std::string r = c < 0 ? "LT" : c > 0 ? "GT" : "EQ";
        out.emit("ord cmp", r, r);
    });

    auto* ord_pw = ord->add_subcommand("pow-omega", "a^w");
    ord_pw->add_option("a", arg_a)->required();
    ord_pw->callback([&] { ordinal_result("ord pow-omega", pow_omega(parse_ordinal(arg_a))); });

    auto* ord_wp = ord->add_subcommand("omega-pow", "w^a");
    ord_wp->add_option("a", arg_a)->required();
    ord_wp->callback([&] { ordinal_result("ord omega-pow", omega_pow(parse_ordinal(arg_a))); });

    // ---- cb: Cantor-Bendixson calculus on [0, alpha] ---------------------
    auto* cb = app.add_subcommand("cb", "Cantor-Bendixson calculus on ordinal intervals");
    cb->require_subcommand(1);

    auto* cb_derive = cb->add_subcommand("derive", "one derivative of [0, alpha]");
    cb_derive->add_option("alpha", arg_a)->required();
    cb_derive->callback([&] {
        auto d = cb_derivative(ordlab::compact_space{parse_ordinal(arg_a)});
        out.emit("cb derive", interval_json(d), interval_text(d));
    });

    auto* cb_power_cmd = cb->add_subcommand("power", "b-th derivative of [0, alpha]");
    cb_power_cmd->add_option("alpha", arg_a)->required();
    cb_power_cmd->add_option("b", arg_b)->required();
    cb_power_cmd->callback([&] {
        auto d = cb_power(ordlab::compact_space{parse_ordinal(arg_a)}, parse_ordinal(arg_b));
        out.emit("cb power", interval_json(d), interval_text(d));
    });

    auto* cb_height_cmd = cb->add_subcommand("height", "Cantor-Bendixson height of [0, alpha]");
    cb_height_cmd->add_option("alpha", arg_a)->required();
    cb_height_cmd->callback([&] {
        ordinal h = cb_height(ordlab::compact_space{parse_ordinal(arg_a)});
        out.emit("cb height", format(h), format(h));
    });

    // ---- index: closed-form invariants -----------------------------------
    auto* index = app.add_subcommand("index", "Szlenk and dentability indices in closed form");
    index->require_subcommand(1);

    auto* idx_sz = index->add_subcommand("sz", "Szlenk index of C([0, alpha])");
    idx_sz->add_option("alpha", arg_a)->required();
    idx_sz->callback([&] { ordinal_result("index sz", ordlab::szlenk_c(parse_ordinal(arg_a))); });

    auto* idx_dz = index->add_subcommand("dz", "dentability index of C([0, alpha])");
    idx_dz->add_option("alpha", arg_a)->required();
    idx_dz->callback(
        [&] { ordinal_result("index dz", ordlab::dentability_c(parse_ordinal(arg_a))); });

    auto* idx_dzh = index->add_subcommand("dz-height", "dentability of C(K) from the CB height of K");
    idx_dzh->add_option("eta", arg_a)->required();
    idx_dzh->callback([&] {
        ordinal_result("index dz-height", ordlab::dentability_from_height(parse_ordinal(arg_a)));
    });

    auto* idx_szl2 = index->add_subcommand("sz-l2", "Szlenk index of L2(C([0, alpha]))");
    idx_szl2->add_option("alpha", arg_a)->required();
    idx_szl2->callback(
        [&] { ordinal_result("index sz-l2", ordlab::szlenk_l2_c(parse_ordinal(arg_a))); });

    auto* idx_iso = index->add_subcommand("iso-class", "Bessaga-Pelczynski class of C([0, alpha])");
    idx_iso->add_option("alpha", arg_a)->required();
    idx_iso->callback(
        [&] { ordinal_result("index iso-class", ordlab::iso_class(parse_ordinal(arg_a))); });

    auto* idx_eq = index->add_subcommand("iso-equiv", "whether C([0,a]) and C([0,b]) are isomorphic");
    idx_eq->add_option("a", arg_a)->required();
    idx_eq->add_option("b", arg_b)->required();
    idx_eq->callback([&] {
        bool eq = ordlab::iso_equivalent(parse_ordinal(arg_a), parse_ordinal(arg_b));
        out.emit("index iso-equiv", eq, eq ? "true" : "false");
    });

    static std::string report_kind = "interval";
    auto* idx_report = index->add_subcommand("report", "full invariant report with checks");
    idx_report->add_option("parameter", arg_a, "alpha (or eta for --kind height)")->required();
    idx_report
        ->add_option("--kind", report_kind, "interval | height | l2 (default interval)")
        ->check(CLI::IsMember({"interval", "height", "l2"}));
    idx_report->callback([&] {
        ordlab::space_descriptor d;
        d.parameter = parse_ordinal(arg_a);
        if (report_kind == "height") d.kind = ordlab::space_kind::c_of_compact_height;
        if (report_kind == "l2") d.kind = ordlab::space_kind::l2_of_c_interval;
        ordlab::index_report r = ordlab::full_report(d);
        json j = to_json(r);
        std::ostringstream text;
        text << "descriptor: " << j["descriptor"]["kind"].get<std::string>() << " "
             << format(d.parameter) << "\n";
        auto line = [&text](const char* name, const json& v) {
            text << name << ": " << (v.is_null() ? "n/a" : v.get<std::string>()) << "\n";
        };
        line("iso_gamma", j["iso_gamma"]);
        text << "szlenk: " << format(r.szlenk) << "\n";
        line("dentability", j["dentability"]);
        line("cb_height", j["cb_height"]);
        for (const auto& c : r.checks)
            text << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << "\n";
        text << (r.all_pass() ? "all checks pass" : "CHECK FAILURE");
        out.emit("index report", std::move(j), text.str());
        if (!r.all_pass()) out.status = 1;
    });

    // ---- lab: finite derivation experiments ------------------------------
    auto* lab = app.add_subcommand("lab", "exact finite slice-derivation experiments");
    lab->require_subcommand(1);
    static std::string input_path, eps_text, norm_text;
    static int by = 0, depth = 0, point_index = 0, stages = 0;
    static std::vector<int> obstacle_indices;

    auto* lab_derive = lab->add_subcommand("derive", "iterated slice derivation of a point set");
    lab_derive->add_option("--input", input_path, "point-set JSON file")->required();
    lab_derive->add_option("--eps", eps_text, "rational eps, \"p/q\" or integer")->required();
    lab_derive->add_option("--norm", norm_text, "override the file's norm (l1|l2|linf)")
        ->check(CLI::IsMember({"l1", "l2", "linf"}));
    lab_derive->callback([&] {
        ordlab::point_set k = ordlab::load_point_set(input_path);
        if (!norm_text.empty()) k.norm = ordlab::norm_from_string(norm_text);
        auto t = ordlab::derive(k, positive_rational(eps_text));
        out.emit("lab derive", to_json(t), trace_text(t));
    });

    auto* lab_tree = lab->add_subcommand("tree", "derive a dyadic tree");
    lab_tree->add_option("--depth", depth, "tree depth (1..5)")->required();
    lab_tree->add_option("--eps", eps_text, "rational eps")->required();
    lab_tree->callback([&] {
        ordlab::dyadic_tree tree = ordlab::make_dyadic_tree(depth);
        auto t = ordlab::derive(tree.set, positive_rational(eps_text));
        json j{{"tree", to_json(tree)}, {"trace", to_json(t)}};
        std::ostringstream text;
        text << "depth " << tree.depth << ", " << tree.set.size() << " points in dim "
             << tree.set.dim << "\n";
        text << trace_text(t) << "\n";
        text << "root rank ";
        if (t.ranks[tree.root_index])
            text << *t.ranks[tree.root_index];
        else
            text << "stable";
        out.emit("lab tree", std::move(j), text.str());
    });

    auto* lab_shift = lab->add_subcommand("shift", "apply the truncated shift to a point set");
    lab_shift->add_option("--input", input_path)->required();
    lab_shift->add_option("--by", by, "shift amount m >= 0")->required();
    lab_shift->callback([&] {
        ordlab::point_set shifted = ordlab::shift(ordlab::load_point_set(input_path), by);
        json j = to_json(shifted);
        out.emit("lab shift", j, j.dump());
    });

    auto* lab_obstacle = lab->add_subcommand("obstacle", "finite-stage obstacle test");
    lab_obstacle->add_option("--input", input_path)->required();
    lab_obstacle
        ->add_option("--obstacle-indices", obstacle_indices, "indices of M, comma separated")
        ->required()
        ->delimiter(',');
    lab_obstacle->add_option("--point", point_index, "index of f")->required();
    lab_obstacle->add_option("--eps", eps_text)->required();
    lab_obstacle->add_option("--stages", stages, "stage count k")->required();
    lab_obstacle->callback([&] {
        ordlab::point_set k = ordlab::load_point_set(input_path);
        bool r = ordlab::check_obstacle(k, obstacle_indices, point_index,
                                        positive_rational(eps_text), stages);
        out.emit("lab obstacle", r, r ? "true" : "false");
    });

    // allow the global --json flag to appear after any subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (auto* s : a->get_subcommands({})) enable_fallthrough(s);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ordlab::syntax_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ordlab::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ordlab::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return out.status;
}
