#include "nil2/cli.hpp"

#include <CLI11.hpp>
#include <iostream>

#include "nil2/errors.hpp"
#include "nil2/groupfile.hpp"
#include "nil2/report.hpp"

namespace nil2 {

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInput = 65;

int answer_exit(Answer a) {
    switch (a) {
        case Answer::Yes: return kExitYes;
        case Answer::No: return kExitNo;
        case Answer::UndeterminedOverQ: return kExitUndetermined;
    }
    return kExitUndetermined;
}

int classification_exit(EquivClassReport::Classification c) {
    using C = EquivClassReport::Classification;
    switch (c) {
        case C::StandardClass:
        case C::IsomorphicPair: return kExitYes;
        case C::Distinct: return kExitNo;
        case C::UndeterminedOverQ: return kExitUndetermined;
    }
    return kExitUndetermined;
}

int emit_verdict(const Verdict& v, const std::string& format, std::ostream& out) {
    if (format == "json")
        out << to_json(v).dump(2) << "\n";
    else
        print_verdict(out, v);
    return answer_exit(v.answer);
}

int emit_report(const EquivClassReport& r, const std::string& format, std::ostream& out) {
    if (format == "json")
        out << to_json(r).dump(2) << "\n";
    else
        print_equiv_report(out, r);
    return classification_exit(r.classification);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact decision procedures for complete nilpotent class-2 groups of finite rank"};
    app.name("nil2");
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string file_a, file_b, expr_1, expr_2;
    std::size_t k = 2;
    SearchOptions opts;

    auto* cmd_check = app.add_subcommand("check", "validate a group file");
    cmd_check->add_option("file", file_a, "group file")->required();

    auto* cmd_pf = app.add_subcommand(
        "pfaffian", "pfaffian form of the symbolic pencil and its rational roots");
    cmd_pf->add_option("file", file_a, "group file")->required();

    auto* cmd_embed = app.add_subcommand("embed-standard", "does N(k,1) embed into the group?");
    cmd_embed->add_option("file", file_a, "group file")->required();
    cmd_embed->add_option("--k", k, "even k of the standard group")->required();
    cmd_embed->add_option("--height", opts.height, "search height bound");

    auto* cmd_approx =
        app.add_subcommand("approx-standard", "does the group approximate into N(k,1)?");
    cmd_approx->add_option("file", file_a, "group file")->required();
    cmd_approx->add_option("--k", k, "even k of the standard group")->required();

    auto* cmd_prec = app.add_subcommand("precedes", "does the first group approximate into the second?");
    cmd_prec->add_option("file_a", file_a, "source group file")->required();
    cmd_prec->add_option("file_b", file_b, "target group file")->required();
    cmd_prec->add_option("--height", opts.height, "search height bound");

    auto* cmd_equiv = app.add_subcommand("equiv", "geometric-equivalence classification");
    cmd_equiv->add_option("file_a", file_a, "first group file")->required();
    cmd_equiv->add_option("file_b", file_b, "second group file")->required();
    cmd_equiv->add_option("--height", opts.height, "search height bound");

    auto* cmd_paper = app.add_subcommand(
        "paper-example", "classify the shipped 4-dimensional rank-2-center example");

    auto* cmd_bch = app.add_subcommand("bch", "multiply two element expressions");
    cmd_bch->add_option("file", file_a, "group file")->required();
    cmd_bch->add_option("expr_1", expr_1, "first element expression")->required();
    cmd_bch->add_option("expr_2", expr_2, "second element expression")->required();

    app.require_subcommand(1);

    std::vector<const char*> argv{"nil2"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitYes;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cmd_check->parsed()) {
            const ClassTwoGroup g = parse_group_file(file_a);
            if (format == "json") {
                nlohmann::json j{{"valid", true},
                                 {"name", g.name()},
                                 {"dimV", g.dimV()},
                                 {"dimW", g.dimW()}};
                out << j.dump(2) << "\n";
            } else {
                out << "valid group '" << g.name() << "' with dimV=" << g.dimV()
                    << " dimW=" << g.dimW() << "\n";
            }
            return kExitYes;
        }
        if (cmd_pf->parsed()) {
            const ClassTwoGroup g = parse_group_file(file_a);
            const BinaryForm pf = pfaffian_pencil(g.pencil()).normalized();
            if (pf.is_zero()) {
                if (format == "json")
                    out << nlohmann::json{{"pfaffian_form", "0"}, {"zero", true}}.dump(2) << "\n";
                else
                    out << "pfaffian: 0 (identically singular pencil)\n";
                return kExitYes;
            }
            const BinaryRoots roots = binary_rational_roots(pf);
            if (format == "json") {
                nlohmann::json j;
                j["pfaffian_form"] = pf.to_string();
                j["pfaffian_form_full"] = pf.to_string_full();
                nlohmann::json pts = nlohmann::json::array();
                for (const auto& [pt, mult] : roots.roots)
                    pts.push_back({{"point", pt.to_string()}, {"multiplicity", mult}});
                j["roots"] = std::move(pts);
                j["leftover"] = roots.leftover.to_string();
                out << j.dump(2) << "\n";
            } else {
                out << "pfaffian: " << pf.to_string() << "\n";
                out << "roots:";
                if (roots.roots.empty()) out << " none";
                for (const auto& [pt, mult] : roots.roots)
                    out << " " << pt.to_string() << " ×" << mult;
                out << "\n";
                if (roots.leftover.degree() >= 1)
                    out << "leftover: " << roots.leftover.to_string() << "\n";
            }
            return kExitYes;
        }
        if (cmd_embed->parsed()) {
            const ClassTwoGroup g = parse_group_file(file_a);
            return emit_verdict(embeds_standard(g, k, opts), format, out);
        }
        if (cmd_approx->parsed()) {
            const ClassTwoGroup g = parse_group_file(file_a);
            return emit_verdict(approx_by_standard(g, k), format, out);
        }
        if (cmd_prec->parsed()) {
            const ClassTwoGroup a = parse_group_file(file_a);
            const ClassTwoGroup b = parse_group_file(file_b);
            return emit_verdict(precedes(a, b, opts), format, out);
        }
        if (cmd_equiv->parsed()) {
            const ClassTwoGroup a = parse_group_file(file_a);
            const ClassTwoGroup b = parse_group_file(file_b);
            return emit_report(geom_equiv(a, b, opts), format, out);
        }
        if (cmd_paper->parsed()) {
            const PaperExampleReport r = paper_example();
            if (format == "json")
                out << to_json(r).dump(2) << "\n";
            else
                print_paper_example(out, r);
            return classification_exit(r.conclusion.classification);
        }
        if (cmd_bch->parsed()) {
            const ClassTwoGroup g = parse_group_file(file_a);
            const LieElement x = parse_element(g, expr_1);
            const LieElement y = parse_element(g, expr_2);
            const LieElement product = bch_mul(x, y);
            if (format == "json") {
                nlohmann::json j;
                nlohmann::json v = nlohmann::json::array(), w = nlohmann::json::array();
                for (const Rational& q : product.v()) v.push_back(to_string(q));
                for (const Rational& q : product.w()) w.push_back(to_string(q));
                j["v"] = std::move(v);
                j["w"] = std::move(w);
                out << j.dump(2) << "\n";
            } else {
                out << product.to_string() << "\n";
            }
            return kExitYes;
        }
    } catch (const SyntaxError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    err << "no subcommand\n";
    return kExitUsage;
}

}  // namespace nil2
