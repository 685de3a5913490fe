#include "nil2/report.hpp"

#include <ostream>

namespace nil2 {

using nlohmann::json;

json to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {
json to_json(const RatVec& v) {
    json out = json::array();
    for (const Rational& x : v) out.push_back(to_string(x));
    return out;
}
}  // namespace

json to_json(const RankLocus& locus) {
    json j;
    j["all_functionals"] = locus.all_functionals;
    j["locus_form"] = locus.locus_form.to_string();
    j["locus_form_full"] = locus.locus_form.to_string_full();
    json points = json::array();
    for (const auto& [pt, mult] : locus.points)
        points.push_back({{"point", pt.to_string()}, {"multiplicity", mult}});
    j["points"] = std::move(points);
    json leftover = json::array();
    for (const auto& f : locus.leftover)
        leftover.push_back({{"form", f.form.to_string()},
                            {"multiplicity", f.multiplicity},
                            {"irreducible_certified", f.certified_irreducible}});
    j["leftover"] = std::move(leftover);
    return j;
}

json to_json(const Certificate& cert) {
    json j;
    if (std::holds_alternative<std::monostate>(cert)) {
        j["type"] = "none";
    } else if (const auto* s = std::get_if<SubspaceWitness>(&cert)) {
        j["type"] = "subspace";
        j["basis"] = to_json(s->basis);
        j["image_line"] = to_json(s->image_line);
    } else if (const auto* f = std::get_if<FunctionalWitness>(&cert)) {
        j["type"] = "functionals";
        json fx = json::array();
        for (const RatVec& psi : f->functionals) fx.push_back(to_json(psi));
        j["functionals"] = std::move(fx);
    } else if (const auto* h = std::get_if<HomWitness>(&cert)) {
        j["type"] = "hom";
        j["phi"] = to_json(h->hom.phi());
        j["psi"] = to_json(h->hom.psi());
        j["injective"] = h->hom.injective();
    } else if (const auto* c = std::get_if<ChainWitness>(&cert)) {
        j["type"] = "chain";
        j["k"] = c->k;
        j["approx"] = c->approx ? to_json(*c->approx) : json();
        j["embed"] = c->embed ? to_json(*c->embed) : json();
    } else if (const auto* l = std::get_if<LocusWitness>(&cert)) {
        j["type"] = "locus";
        j["locus"] = to_json(l->locus);
    } else if (const auto* o = std::get_if<Obstruction>(&cert)) {
        j["type"] = "obstruction";
        j["reason"] = o->reason;
    }
    return j;
}

json to_json(const Verdict& v) {
    json j;
    j["answer"] = to_string(v.answer);
    j["question"] = v.question;
    j["certificate"] = to_json(v.certificate);
    j["trace"] = v.trace;
    j["citations"] = v.citations;
    return j;
}

json to_json(const EquivClassReport& r) {
    json j;
    j["classification"] = to_string(r.classification);
    if (r.classification == EquivClassReport::Classification::StandardClass) j["k"] = r.k;
    j["details"] = r.details;
    json verdicts = json::array();
    for (const Verdict& v : r.supporting) verdicts.push_back(to_json(v));
    j["supporting"] = std::move(verdicts);
    j["trace"] = r.trace;
    j["citations"] = r.citations;
    return j;
}

json to_json(const PaperExampleReport& r) {
    json j;
    j["group"] = r.group.name();
    j["pfaffian_form"] = r.pfaffian_form.to_string();
    j["pfaffian_form_full"] = r.pfaffian_form.to_string_full();
    j["det_form"] = r.det_form.to_string();
    j["locus_k2"] = to_json(r.locus_k2);
    j["embed_k2"] = to_json(r.embed_k2);
    j["approx_k2"] = to_json(r.approx_k2);
    j["obstruction_k4"] = to_json(r.obstruction_k4);
    j["report"] = to_json(r.conclusion);
    j["trace"] = r.trace;
    return j;
}

void print_verdict(std::ostream& os, const Verdict& v) {
    os << v.question << ": " << to_string(v.answer) << "\n";
    if (const auto* s = std::get_if<SubspaceWitness>(&v.certificate)) {
        os << "  witness subspace basis (columns):\n";
        for (std::size_t i = 0; i < s->basis.rows(); ++i) {
            os << "    ";
            for (std::size_t j = 0; j < s->basis.cols(); ++j)
                os << to_string(s->basis(i, j)) << (j + 1 < s->basis.cols() ? " " : "");
            os << "\n";
        }
        os << "  bracket image line: " << to_string(s->image_line) << "\n";
    } else if (const auto* f = std::get_if<FunctionalWitness>(&v.certificate)) {
        os << "  functionals:";
        for (const RatVec& psi : f->functionals) os << " " << to_string(psi);
        os << "\n";
    } else if (const auto* h = std::get_if<HomWitness>(&v.certificate)) {
        os << "  hom phi:\n" << h->hom.phi().to_string();
        os << "  hom psi:\n" << h->hom.psi().to_string();
    } else if (const auto* c = std::get_if<ChainWitness>(&v.certificate)) {
        os << "  chain through N(" << c->k << ",1)\n";
        if (c->approx) print_verdict(os, *c->approx);
        if (c->embed) print_verdict(os, *c->embed);
    } else if (const auto* o = std::get_if<Obstruction>(&v.certificate)) {
        os << "  obstruction: " << o->reason << "\n";
    }
    for (const std::string& t : v.trace) os << "  | " << t << "\n";
    if (!v.citations.empty()) {
        os << "  cites:";
        for (const std::string& c : v.citations) os << " " << c << ";";
        os << "\n";
    }
}

void print_equiv_report(std::ostream& os, const EquivClassReport& r) {
    os << "classification: " << to_string(r.classification);
    if (r.classification == EquivClassReport::Classification::StandardClass)
        os << " N(" << r.k << ",1)";
    os << "\n" << r.details << "\n";
    for (const std::string& t : r.trace) os << "  | " << t << "\n";
    for (const Verdict& v : r.supporting) print_verdict(os, v);
    if (!r.citations.empty()) {
        os << "cites:";
        for (const std::string& c : r.citations) os << " " << c << ";";
        os << "\n";
    }
}

void print_paper_example(std::ostream& os, const PaperExampleReport& r) {
    os << "group: " << r.group.name() << "\n";
    os << "pfaffian form: " << r.pfaffian_form.to_string() << "\n";
    os << "det form: " << r.det_form.to_string() << "\n";
    os << "rank<=2 locus:";
    for (const auto& [pt, mult] : r.locus_k2.points)
        os << " " << pt.to_string() << " x" << mult;
    os << "\n";
    for (const std::string& t : r.trace) os << "  | " << t << "\n";
    print_equiv_report(os, r.conclusion);
}

}  // namespace nil2
