#include "pseudoval/documents.hpp"

#include <nlohmann/json.hpp>

#include "pseudoval/errors.hpp"
#include "pseudoval/literals.hpp"

namespace pseudoval {
namespace {

using Json = nlohmann::ordered_json;

Json parseDoc(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
}

const Json& field(const Json& obj, const char* key) {
    if (!obj.is_object()) throw DomainError("document node must be a JSON object");
    auto it = obj.find(key);
    if (it == obj.end()) throw DomainError(std::string("document is missing key \"") + key + "\"");
    return *it;
}

std::string stringField(const Json& obj, const char* key) {
    const Json& v = field(obj, key);
    if (!v.is_string()) throw DomainError(std::string("key \"") + key + "\" must be a string");
    return v.get<std::string>();
}

Rat ratField(const Json& obj, const char* key) { return parseRat(stringField(obj, key)); }

FieldConfig configOf(const Json& obj) { return FieldConfig::parse(stringField(obj, "config")); }

// --- elements --------------------------------------------------------------

Json termsToJson(const std::vector<Term>& terms) {
    Json arr = Json::array();
    for (const Term& t : terms) arr.push_back(Json{{"c", t.coeff.str()}, {"q", t.exp.str()}});
    return arr;
}

std::vector<Term> termsFromJson(const Json& arr) {
    if (!arr.is_array()) throw DomainError("term list must be a JSON array");
    std::vector<Term> out;
    for (const Json& t : arr) out.push_back({parseRat(stringField(t, "c")), parseRat(stringField(t, "q"))});
    return out;
}

Json elementToJson(const FieldElem& e) {
    Json doc;
    doc["config"] = e.config().str();
    if (e.config().kind() == FieldConfig::Kind::PAdic) {
        doc["value"] = e.rationalValue().str();
    } else {
        doc["numeratorTerms"] = termsToJson(e.numeratorTerms());
        doc["denominatorTerms"] = termsToJson(e.denominatorTerms());
    }
    return doc;
}

FieldElem elementFromJson(const Json& doc) {
    FieldConfig cfg = configOf(doc);
    if (cfg.kind() == FieldConfig::Kind::PAdic)
        return FieldElem::fromRational(cfg, parseRat(stringField(doc, "value")));
    return FieldElem::fromTerms(cfg, termsFromJson(field(doc, "numeratorTerms")),
                                termsFromJson(field(doc, "denominatorTerms")));
}

// Element embedded inside a larger document: a literal string, against a known config.
FieldElem elementIn(const FieldConfig& cfg, const Json& obj, const char* key) {
    return parseElement(cfg, stringField(obj, key));
}

// --- sequence descriptors ----------------------------------------------------

const char* kindName(SeqKind k) {
    switch (k) {
        case SeqKind::Convergent: return "convergent";
        case SeqKind::Divergent: return "divergent";
        case SeqKind::Stationary: return "stationary";
    }
    throw DomainError("unknown sequence kind");
}

SeqKind kindFromName(const std::string& s) {
    if (s == "convergent") return SeqKind::Convergent;
    if (s == "divergent") return SeqKind::Divergent;
    if (s == "stationary") return SeqKind::Stationary;
    throw DomainError("unknown sequence kind \"" + s + "\"");
}

Json gaugeToJson(const GaugeGen& g) {
    Json doc;
    switch (g.family()) {
        case GaugeFamily::ApproachFromBelow: doc["family"] = "approach"; break;
        case GaugeFamily::DescendTo: doc["family"] = "descend"; break;
        case GaugeFamily::Constant: doc["family"] = "constant"; break;
    }
    doc["target"] = g.target().str();
    if (const auto* d = std::get_if<DyadicStepRule>(&g.rule())) {
        doc["rule"] = d->scale == Rat(1) ? Json("dyadic-step")
                                         : Json{{"dyadic-step", d->scale.str()}};
    } else if (std::holds_alternative<BinaryTruncationRule>(g.rule())) {
        doc["rule"] = "binary-truncation";
    } else if (const auto* l = std::get_if<LinearRule>(&g.rule())) {
        doc["rule"] = Json{{"linear", Json{{"start", l->start.str()}, {"step", l->step.str()}}}};
    } else {
        const auto& vals = std::get<ExplicitRule>(g.rule()).values;
        Json arr = Json::array();
        for (const Rat& v : vals) arr.push_back(v.str());
        doc["rule"] = arr;
    }
    if (!(g.offset() == Rat(0))) doc["offset"] = g.offset().str();
    return doc;
}

GaugeGen gaugeFromJson(const Json& doc) {
    std::string fam = stringField(doc, "family");
    GaugeFamily family;
    if (fam == "approach") family = GaugeFamily::ApproachFromBelow;
    else if (fam == "descend") family = GaugeFamily::DescendTo;
    else if (fam == "constant") family = GaugeFamily::Constant;
    else throw DomainError("unknown gauge family \"" + fam + "\"");

    ExtRat target = parseExtRat(stringField(doc, "target"));

    GaugeRule rule = BinaryTruncationRule{};
    const Json& r = field(doc, "rule");
    if (r.is_string()) {
        std::string name = r.get<std::string>();
        if (name == "binary-truncation") rule = BinaryTruncationRule{};
        else if (name == "dyadic-step") rule = DyadicStepRule{Rat(1)};
        else throw DomainError("unknown gauge rule \"" + name + "\"");
    } else if (r.is_array()) {
        ExplicitRule ex;
        for (const Json& v : r) {
            if (!v.is_string()) throw DomainError("explicit gauge values must be strings");
            ex.values.push_back(parseRat(v.get<std::string>()));
        }
        rule = std::move(ex);
    } else if (r.is_object()) {
        if (auto it = r.find("dyadic-step"); it != r.end())
            rule = DyadicStepRule{parseRat(it->get<std::string>())};
        else if (auto lt = r.find("linear"); lt != r.end())
            rule = LinearRule{ratField(*lt, "start"), ratField(*lt, "step")};
        else
            throw DomainError("unknown gauge rule object");
    } else {
        throw DomainError("gauge rule must be a string, array, or object");
    }

    Rat offset(0);
    if (auto it = doc.find("offset"); it != doc.end()) offset = parseRat(it->get<std::string>());
    if (offset == Rat(0)) return GaugeGen(family, target, std::move(rule));
    // target_ stores the shifted target; reconstruct the unshifted generator first.
    ExtRat raw = target.isFinite() ? ExtRat(target.finite() - offset) : target;
    return GaugeGen(family, raw, std::move(rule)).shifted(offset);
}

Json coeffsToJson(const CoeffStream& c) {
    bool plainScale = c.scale == Rat(1) && !c.inverted;
    if (plainScale && c.kind == CoeffKind::Ones) return Json("ones");
    if (plainScale && c.kind == CoeffKind::Enumerate) return Json("enumerate");
    if (plainScale && c.kind == CoeffKind::Cycle) {
        Json arr = Json::array();
        for (const Rat& v : c.cycle) arr.push_back(v.str());
        return arr;
    }
    Json doc;
    doc["kind"] = c.kind == CoeffKind::Ones ? "ones"
                : c.kind == CoeffKind::Enumerate ? "enumerate" : "cycle";
    if (c.kind == CoeffKind::Cycle) {
        Json arr = Json::array();
        for (const Rat& v : c.cycle) arr.push_back(v.str());
        doc["cycle"] = arr;
    }
    doc["scale"] = c.scale.str();
    doc["inverted"] = c.inverted;
    return doc;
}

CoeffStream coeffsFromJson(const Json& doc) {
    CoeffStream out;
    auto cycleFrom = [](const Json& arr) {
        std::vector<Rat> vals;
        for (const Json& v : arr) {
            if (!v.is_string()) throw DomainError("coefficient cycle values must be strings");
            vals.push_back(parseRat(v.get<std::string>()));
        }
        return vals;
    };
    if (doc.is_string()) {
        std::string name = doc.get<std::string>();
        if (name == "ones") out.kind = CoeffKind::Ones;
        else if (name == "enumerate") out.kind = CoeffKind::Enumerate;
        else throw DomainError("unknown coefficient stream \"" + name + "\"");
    } else if (doc.is_array()) {
        out.kind = CoeffKind::Cycle;
        out.cycle = cycleFrom(doc);
    } else if (doc.is_object()) {
        std::string name = stringField(doc, "kind");
        if (name == "ones") out.kind = CoeffKind::Ones;
        else if (name == "enumerate") out.kind = CoeffKind::Enumerate;
        else if (name == "cycle") out.kind = CoeffKind::Cycle;
        else throw DomainError("unknown coefficient stream kind \"" + name + "\"");
        if (out.kind == CoeffKind::Cycle) out.cycle = cycleFrom(field(doc, "cycle"));
        if (auto it = doc.find("scale"); it != doc.end()) out.scale = parseRat(it->get<std::string>());
        if (auto it = doc.find("inverted"); it != doc.end()) {
            if (!it->is_boolean()) throw DomainError("\"inverted\" must be a boolean");
            out.inverted = it->get<bool>();
        }
    } else {
        throw DomainError("coeffs must be a string, array, or object");
    }
    return out;
}

Json seqToJson(const SeqSpec& spec);

Json pertToJson(const Perturbation& p) {
    if (const auto* g = std::get_if<GaugeMonomialPert>(&p))
        return Json{{"type", "gauge-monomial"}, {"coeff", g->coeff.str()}, {"extra", g->extraExp.str()}};
    if (const auto* s = std::get_if<ScaleResidualPert>(&p))
        return Json{{"type", "scale-residual"},
                    {"factor", s->factor.str()},
                    {"source", seqToJson(*s->source)}};
    if (const auto* i = std::get_if<InvertResidualPert>(&p))
        return Json{{"type", "invert-residual"}, {"source", seqToJson(*i->source)}};
    throw DomainError("cannot serialize an empty perturbation");
}

Perturbation pertFromJson(const FieldConfig& cfg, const Json& doc);

SeqSpec seqFromJson(const Json& doc) {
    FieldConfig cfg = configOf(doc);
    SeqKind kind = kindFromName(stringField(doc, "kind"));
    FieldElem base = elementIn(cfg, doc, "base");
    GaugeGen gauge = gaugeFromJson(field(doc, "gauge"));
    CoeffStream coeffs;
    if (auto it = doc.find("coeffs"); it != doc.end()) coeffs = coeffsFromJson(*it);
    Perturbation pert;
    if (auto it = doc.find("perturbation"); it != doc.end()) pert = pertFromJson(cfg, *it);
    return SeqSpec(kind, std::move(base), std::move(gauge), std::move(coeffs), std::move(pert));
}

Perturbation pertFromJson(const FieldConfig& cfg, const Json& doc) {
    std::string type = stringField(doc, "type");
    if (type == "gauge-monomial")
        return GaugeMonomialPert{ratField(doc, "coeff"), ratField(doc, "extra")};
    if (type == "scale-residual")
        return ScaleResidualPert{elementIn(cfg, doc, "factor"),
                                 std::make_shared<SeqSpec>(seqFromJson(field(doc, "source")))};
    if (type == "invert-residual")
        return InvertResidualPert{std::make_shared<SeqSpec>(seqFromJson(field(doc, "source")))};
    throw DomainError("unknown perturbation type \"" + type + "\"");
}

Json seqToJson(const SeqSpec& spec) {
    Json doc;
    doc["config"] = spec.config().str();
    doc["kind"] = kindName(spec.kind());
    doc["base"] = spec.base().str();
    doc["gauge"] = gaugeToJson(spec.gauge());
    doc["coeffs"] = coeffsToJson(spec.coeffs());
    if (!std::holds_alternative<std::monostate>(spec.perturbation()))
        doc["perturbation"] = pertToJson(spec.perturbation());
    return doc;
}

// --- lambda spaces -----------------------------------------------------------

Json lambdaToJson(const LambdaSpace& space) {
    Json doc;
    doc["a"] = space.lower().str();
    doc["b"] = space.upper().str();
    Json arr = Json::array();
    for (const LambdaPoint& p : space.points())
        arr.push_back(Json{{"value", p.value.str()}, {"index", p.index}});
    doc["lambda"] = arr;
    return doc;
}

LambdaSpace lambdaFromJson(const Json& doc) {
    ExtRat a = parseExtRat(stringField(doc, "a"));
    ExtRat b = parseExtRat(stringField(doc, "b"));
    const Json& arr = field(doc, "lambda");
    if (!arr.is_array()) throw DomainError("\"lambda\" must be a JSON array");
    std::vector<LambdaPoint> points;
    for (const Json& p : arr) {
        const Json& idx = field(p, "index");
        if (!idx.is_number_unsigned() && !idx.is_number_integer())
            throw DomainError("mark index must be an integer");
        long i = idx.get<long>();
        if (i < 1) throw DomainError("mark indices start at 1");
        points.push_back({parseRat(stringField(p, "value")), static_cast<std::size_t>(i)});
    }
    return LambdaSpace(a, b, std::move(points));
}

// --- xad descriptors ----------------------------------------------------------

Json xadToJson(const XadDescriptor& d) {
    Json doc;
    doc["config"] = d.alpha.config().str();
    doc["alpha"] = d.alpha.str();
    doc["c"] = d.c.str();
    if (std::holds_alternative<FieldElem>(d.z))
        doc["z"] = std::get<FieldElem>(d.z).str();
    else
        doc["z"] = std::get<XadMarker>(d.z) == XadMarker::StationaryF ? "stationary-f"
                                                                      : "convergent-e";
    return doc;
}

XadDescriptor xadFromJson(const Json& doc) {
    FieldConfig cfg = configOf(doc);
    FieldElem alpha = elementIn(cfg, doc, "alpha");
    FieldElem c = elementIn(cfg, doc, "c");
    std::string z = stringField(doc, "z");
    if (z == "stationary-f") return {alpha, c, XadMarker::StationaryF};
    if (z == "convergent-e") return {alpha, c, XadMarker::ConvergentE};
    return {alpha, c, parseElement(cfg, z)};
}

} // namespace

std::string elementToDoc(const FieldElem& e) { return elementToJson(e).dump(); }
FieldElem elementFromDoc(const std::string& doc) { return elementFromJson(parseDoc(doc)); }

std::string seqSpecToDoc(const SeqSpec& spec) { return seqToJson(spec).dump(); }
SeqSpec seqSpecFromDoc(const std::string& doc) { return seqFromJson(parseDoc(doc)); }

std::string lambdaSpaceToDoc(const LambdaSpace& space) { return lambdaToJson(space).dump(); }
LambdaSpace lambdaSpaceFromDoc(const std::string& doc) { return lambdaFromJson(parseDoc(doc)); }

std::string xadToDoc(const XadDescriptor& d) { return xadToJson(d).dump(); }
XadDescriptor xadFromDoc(const std::string& doc) { return xadFromJson(parseDoc(doc)); }

} // namespace pseudoval
