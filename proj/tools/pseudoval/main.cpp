// pseudoval: batch front-end for the extension-space library. One subcommand per
// operation; each run emits line-delimited reports (JSON objects or "key: value"
// text blocks). Exit codes: 0 success, 1 domain/parse error, 2 heuristic
// indecision (a windowed computation failed to stabilize).

#include <pseudoval/documents.hpp>
#include <pseudoval/literals.hpp>
#include <pseudoval/metrics.hpp>
#include <pseudoval/report.hpp>
#include <pseudoval/suites.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace pv = pseudoval;
using Json = nlohmann::ordered_json;

namespace {

// Inputs for one subcommand: explicit flags win, then the --in document, then the
// declared default. Values in the --in document may be strings (used verbatim) or
// structured JSON (passed on in serialized form).
class SubIO {
public:
    explicit SubIO(CLI::App* cmd) : cmd_(cmd) {}

    void opt(const std::string& name, const std::string& desc) {
        cmd_->add_option("--" + name, vals_[name], desc);
    }
    void flag(const std::string& name, const std::string& desc) {
        cmd_->add_flag("--" + name, flags_[name], desc);
    }

    void attachFile(const Json* file) { file_ = file; }

    bool has(const std::string& name) const {
        if (cmd_->count("--" + name) > 0) return true;
        return file_ && file_->is_object() && file_->contains(name);
    }
    std::string get(const std::string& name) const {
        if (cmd_->count("--" + name) > 0) return vals_.at(name);
        if (file_ && file_->is_object() && file_->contains(name)) {
            const Json& v = (*file_)[name];
            return v.is_string() ? v.get<std::string>() : v.dump();
        }
        throw pv::DomainError("missing input --" + name);
    }
    std::string get(const std::string& name, const std::string& fallback) const {
        return has(name) ? get(name) : fallback;
    }
    bool isSet(const std::string& name) const {  // boolean flags (command line only)
        auto it = flags_.find(name);
        return it != flags_.end() && it->second;
    }

    CLI::App* cmd() const { return cmd_; }

private:
    CLI::App* cmd_;
    std::map<std::string, std::string> vals_;
    std::map<std::string, bool> flags_;
    const Json* file_ = nullptr;
};

std::vector<std::string> splitList(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

long parseLong(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        long v = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw pv::DomainError("invalid integer for " + what + ": \"" + text + "\"");
    }
}

bool isPrime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// "q" for the rationals, "f<p>" for a prime field; matches BaseK::str().
pv::BaseK parseK(const std::string& text) {
    std::string s = trimmed(text);
    if (s == "q" || s == "Q") return pv::BaseK{0};
    if ((s.size() > 1) && (s[0] == 'f' || s[0] == 'F')) {
        unsigned long p = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw pv::ParseError("bad coefficient field literal \"" + s + "\"", i);
            p = p * 10 + static_cast<unsigned long>(s[i] - '0');
            if (p > 1000000) throw pv::DomainError("coefficient field prime too large");
        }
        if (!isPrime(p)) throw pv::DomainError("coefficient field order must be prime, got " +
                                               std::to_string(p));
        return pv::BaseK{p};
    }
    throw pv::DomainError("unknown coefficient field \"" + s + "\" (use q or f<p>)");
}

std::string boundaryName(pv::BallBoundary b) {
    return b == pv::BallBoundary::Open ? "open" : "closed";
}

std::string kindName(pv::SeqKind k) {
    switch (k) {
        case pv::SeqKind::Convergent: return "convergent";
        case pv::SeqKind::Divergent: return "divergent";
        case pv::SeqKind::Stationary: return "stationary";
    }
    return "?";
}

void echoBall(pv::RunReport& r, const pv::Ball& ball) {
    Json j;
    j["center"] = ball.center.str();
    j["radius"] = ball.radius.str();
    j["boundary"] = boundaryName(ball.boundary);
    r.setDoc("ball", j.dump());
}

pv::SeqSpec seqArg(const SubIO& io, const std::string& name) {
    return pv::seqSpecFromDoc(io.get(name));
}

// Optional --field cross-check against the config a document carries.
void checkField(const SubIO& io, const pv::FieldConfig& cfg, const std::string& which) {
    if (!io.has("field")) return;
    if (!(pv::FieldConfig::parse(io.get("field")) == cfg))
        throw pv::DomainError("--field does not match the config of " + which);
}

struct Ctx {
    pv::ReportFormat format = pv::ReportFormat::Json;
    bool timing = false;
    std::uint64_t seed = 0;
    Json inDoc;  // null unless --in was given
    std::ostream* out = &std::cout;
    bool printedAny = false;

    void emit(const pv::RunReport& r) {
        if (printedAny && format == pv::ReportFormat::Text) *out << "\n";
        *out << r.render(format) << "\n";
        printedAny = true;
    }
};

using Clock = std::chrono::steady_clock;

void stampTiming(Ctx& ctx, pv::RunReport& r, Clock::time_point started) {
    if (!ctx.timing) return;
    r.setDouble("seconds", std::chrono::duration<double>(Clock::now() - started).count());
}

// --- subcommand bodies ----------------------------------------------------------

int runClassify(Ctx& ctx, SubIO& io) {
    auto started = Clock::now();
    pv::RunReport r("classify");
    std::vector<pv::FieldElem> span;
    if (io.has("seq")) {
        pv::SeqSpec spec = seqArg(io, "seq");
        checkField(io, spec.config(), "--seq");
        long terms = parseLong(io.get("terms", "6"), "--terms");
        if (terms < 1 || terms > 64) throw pv::DomainError("--terms must be in [1, 64]");
        for (long n = 0; n < terms; ++n) span.push_back(spec.materialize(static_cast<std::size_t>(n)));
        r.setDoc("seq", pv::seqSpecToDoc(spec));
        r.setString("config", spec.config().str());
    } else {
        pv::FieldConfig cfg = pv::FieldConfig::parse(io.get("field"));
        std::string joined = trimmed(io.get("sample"));
        if (joined.empty()) throw pv::DomainError("--sample is empty");
        std::vector<std::string> parts;
        if (joined.front() == '[') {  // JSON array form from --in
            try {
                Json arr = Json::parse(joined);
                for (const Json& v : arr) parts.push_back(v.get<std::string>());
            } catch (const Json::exception& e) {
                throw pv::ParseError(std::string("--sample: ") + e.what(), 0);
            }
        } else {
            parts = splitList(joined, ';');
        }
        for (const std::string& p : parts) span.push_back(pv::parseElement(cfg, trimmed(p)));
        r.setString("config", cfg.str());
    }
    std::vector<std::string> canon;
    canon.reserve(span.size());
    for (const pv::FieldElem& e : span) canon.push_back(e.str());
    r.setStrings("sample", canon);

    std::optional<pv::SeqKind> kind = pv::classify(span);
    if (!kind)
        throw pv::WindowError("sample of " + std::to_string(span.size()) +
                              " terms is not decisively pseudo-monotone");
    r.setString("kind", kindName(*kind));
    r.markHeuristic();  // finite-sample inference is never exact
    stampTiming(ctx, r, started);
    ctx.emit(r);
    return 0;
}

int runBreadth(Ctx& ctx, SubIO& io) {
    auto started = Clock::now();
    pv::RunReport r("breadth");
    pv::SeqSpec spec = seqArg(io, "seq");
    checkField(io, spec.config(), "--seq");
    r.setDoc("seq", pv::seqSpecToDoc(spec));
    r.setString("kind", kindName(spec.kind()));
    r.setString("breadth", spec.breadth().str());
    echoBall(r, spec.pseudoLimitSet());
    stampTiming(ctx, r, started);
    ctx.emit(r);
    return 0;
}

int runLimits(Ctx& ctx, SubIO& io) {
    auto started = Clock::now();
    pv::RunReport r("limits");
    pv::SeqSpec spec = seqArg(io, "seq");
    checkField(io, spec.config(), "--seq");
    r.setDoc("seq", pv::seqSpecToDoc(spec));
    pv::Ball ball = spec.pseudoLimitSet();
    echoBall(r, ball);
    r.setBool("singleton", ball.isSingleton());
    r.setBool("wholeField", ball.isWholeField());
    if (io.has("x")) {
        pv::FieldElem x = pv::parseElement(spec.config(), io.get("x"));
        r.setString("x", x.str());
        r.setBool("member", ball.contains(x));
    }
    stampTiming(ctx, r, started);
    ctx.emit(r);
    return 0;
}

int runMember(Ctx& ctx, SubIO& io) {
    auto started = Clock::now();
    pv::RunReport r("member");
    pv::SeqSpec spec = seqArg(io, "seq");
    checkField(io, spec.config(), "--seq");
    pv::RatFunc phi = pv::parseRatFunc(spec.config(), io.get("phi"));
    r.setDoc("seq", pv::seqSpecToDoc(spec));
    r.setString("phi", phi.str());
    pv::Verdict v = pv::ringContains(spec, phi);
    r.setBool("contains", v.value);
    if (v.heuristic) r.markHeuristic();
    stampTiming(ctx, r, started);
    ctx.emit(r);
    return 0;
}

int runWe(Ctx& ctx, SubIO& io) {
    auto started = Clock::now();
    pv::RunReport r("we");
    pv::SeqSpec spec = seqArg(io, "seq");
    checkField(io, spec.config(), "--seq");
    pv::RatFunc phi = pv::parseRatFunc(spec.config(), io.get("phi"));
    r.setDoc("seq", pv::seqSpecToDoc(spec));
    r.setString("phi", phi.str());
    pv::LimitResult w = pv::limitValuation(spec, phi);
    r.setString("value", w.value.str());
    if (phi.isFactored()) {
        pv::MembershipAnalysis ana = pv::analyzeFactored(spec, phi);
        r.setString("outPart", ana.outPart.str());
        r.setInt("ballMultiplicity", ana.ballMultiplicity);
        r.setInt("windowStart", static_cast<long long>(ana.windowStart));
        r.setBool("contains", ana.contains);
    }
    if (w.heuristic) r.markHeuristic();
    stampTiming(ctx, r, started);
    ctx.emit(r);
    return 0;
}

int runDist(Ctx& ctx, SubIO& io) {
    auto started = Clock::now();
    pv::RunReport r("dist");
    pv::SeqSpec a = seqArg(io, "e1"), b = seqArg(io, "e2");
    checkField(io, a.config(), "--e1");
    checkField(io, b.config(), "--e2");
    r.setDoc("e1", pv::seqSpecToDoc(a));
    r.setDoc("e2", pv::seqSpecToDoc(b));
    pv::ExtRing A(std::move(a)), B(std::move(b));
    pv::DistDesc d = pv::DistDesc::zero(A.breadth());
    if (io.isSet("window")) {
        pv::DistWindowResult wr = pv::distDeltaWindow(A, B);
        d = wr.desc;
        r.setInt("samples", static_cast<long long>(wr.samples));
        if (wr.heuristic) r.markHeuristic();
    } else {
        d = pv::distDelta(A, B);
    }
    r.setString("eta", d.eta().str());
    r.setString("delta", d.delta().str());
    r.setBool("zero", d.isZero());
    r.setDouble("displayValue", d.approxValue());
    r.setString("displayNote", "non-normative decimal rendering of e^(-eta) - e^(-delta)");
    stampTiming(ctx, r, started);
    ctx.emit(r);
    return 0;
}

int runSimil(Ctx& ctx, SubIO& io) {
    auto started = Clock::now();
    pv::RunReport r("simil");
    pv::SeqSpec src = seqArg(io, "seq");
    checkField(io, src.config(), "--seq");
    pv::FieldElem c = pv::parseElement(src.config(), io.get("c"));
    pv::SeqSpec out = pv::scaleSpec(c, src);
    r.setString("c", c.str());
    r.setString("scaleValuation", c.valuation().str());
    r.setDoc("seq", pv::seqSpecToDoc(src));
    r.setDoc("result", pv::seqSpecToDoc(out));
    r.setString("breadthBefore", src.breadth().str());
    r.setString("breadthAfter", out.breadth().str());
    stampTiming(ctx, r, started);
    ctx.emit(r);
    return 0;
}

int runInvert(Ctx& ctx, SubIO& io) {
    auto started = Clock::now();
    pv::RunReport r("invert");
    pv::SeqSpec src = seqArg(io, "seq");
    checkField(io, src.config(), "--seq");
    pv::SeqSpec out = pv::invertSequence(src);
    r.setDoc("seq", pv::seqSpecToDoc(src));
    r.setDoc("result", pv::seqSpecToDoc(out));
    r.setString("breadthBefore", src.breadth().str());
    r.setString("breadthAfter", out.breadth().str());
    stampTiming(ctx, r, started);
    ctx.emit(r);
    return 0;
}

int runSigma(Ctx& ctx, SubIO& io) {
    auto started = Clock::now();
    pv::RunReport r("sigma");
    pv::SeqSpec spec = seqArg(io, "seq");
    checkField(io, spec.config(), "--seq");
    pv::FieldElem t = pv::parseElement(spec.config(), io.get("t"));
    r.setDoc("seq", pv::seqSpecToDoc(spec));
    r.setString("t", t.str());
    pv::LimitResult w = pv::limitValuation(spec, pv::RatFunc::linear(t));
    r.setString("value", w.value.str());
    if (io.has("gamma")) {
        pv::ExtRat gamma = pv::parseExtRat(io.get("gamma"));
        r.setString("gamma", gamma.str());
        r.setBool("omegaContains", pv::omegaContains(spec, t, gamma));
        r.setBool("breadthWithinGamma", spec.breadth() <= gamma);
    }
    if (w.heuristic) r.markHeuristic();
    stampTiming(ctx, r, started);
    ctx.emit(r);
    return 0;
}

int runLambdaDist(Ctx& ctx, SubIO& io) {
    auto started = Clock::now();
    pv::RunReport r("lambda-dist");
    pv::LambdaSpace space = pv::lambdaSpaceFromDoc(io.get("space"));
    pv::Rat x = pv::parseRat(io.get("x")), y = pv::parseRat(io.get("y"));
    r.setDoc("space", pv::lambdaSpaceToDoc(space));
    r.setString("x", x.str());
    r.setString("y", y.str());
    pv::LambdaDistance d = pv::lambdaDist(space, x, y);
    r.setString("value", d.value.str());
    r.setBool("degenerate", d.degenerate);
    stampTiming(ctx, r, started);
    ctx.emit(r);
    return 0;
}

int runLambdaBall(Ctx& ctx, SubIO& io) {
    auto started = Clock::now();
    pv::RunReport r("lambda-ball");
    pv::LambdaSpace space = pv::lambdaSpaceFromDoc(io.get("space"));
    pv::Rat x = pv::parseRat(io.get("x")), rho = pv::parseRat(io.get("rho"));
    r.setDoc("space", pv::lambdaSpaceToDoc(space));
    r.setString("x", x.str());
    r.setString("rho", rho.str());
    pv::HalfOpen iv = pv::ballToInterval(space, x, rho);
    r.setString("y", iv.lo.str());
    r.setString("z", iv.hi.str());
    stampTiming(ctx, r, started);
    ctx.emit(r);
    return 0;
}

int runCoverWitness(Ctx& ctx, SubIO& io) {
    auto started = Clock::now();
    pv::RunReport r("cover-witness");
    pv::LambdaSpace space = pv::lambdaSpaceFromDoc(io.get("space"));
    r.setDoc("space", pv::lambdaSpaceToDoc(space));

    std::vector<pv::Rat> gammas;
    std::vector<std::string> canonGammas;
    for (const std::string& part : splitList(io.get("gammas"), ',')) {
        gammas.push_back(pv::parseRat(trimmed(part)));
        canonGammas.push_back(gammas.back().str());
    }
    r.setStrings("gammas", canonGammas);

    std::vector<std::size_t> chosen;
    std::string chosenText = trimmed(io.get("chosen", ""));
    if (!chosenText.empty()) {
        for (const std::string& part : splitList(chosenText, ',')) {
            long k = parseLong(trimmed(part), "--chosen");
            if (k < 1) throw pv::DomainError("--chosen indices are 1-based");
            chosen.push_back(static_cast<std::size_t>(k));
        }
    }
    Json chosenEcho = Json::array();
    for (std::size_t k : chosen) chosenEcho.push_back(k);
    r.setDoc("chosen", chosenEcho.dump());

    pv::Rat witness = pv::coverWitness(space, gammas, chosen);
    r.setString("witness", witness.str());
    stampTiming(ctx, r, started);
    ctx.emit(r);
    return 0;
}

int runZar(Ctx& ctx, SubIO& member, SubIO& isolated, SubIO& generic) {
    auto started = Clock::now();
    if (member.cmd()->parsed()) {
        pv::RunReport r("zar member");
        pv::BaseK k = parseK(member.get("field"));
        pv::ZarPoint p = pv::parseZarPoint(k, member.get("point"));
        pv::KRatFunc psi = pv::parseKRatFunc(k, member.get("psi"));
        r.setString("field", k.str());
        r.setString("point", p.str());
        r.setString("psi", psi.str());
        r.setBool("contains", pv::zarContains(p, psi));
        stampTiming(ctx, r, started);
        ctx.emit(r);
        return 0;
    }
    if (isolated.cmd()->parsed()) {
        pv::RunReport r("zar isolated");
        pv::BaseK k = parseK(isolated.get("field"));
        pv::ZarPoint p = pv::parseZarPoint(k, isolated.get("point"));
        r.setString("field", k.str());
        r.setString("point", p.str());
        pv::IsolationCertificate cert = [&] {
            if (isolated.has("sample")) {
                std::vector<pv::ZarPoint> sample;
                for (const std::string& part : splitList(isolated.get("sample"), ';'))
                    sample.push_back(pv::parseZarPoint(k, trimmed(part)));
                return pv::isolatedCertificate(p, std::move(sample));
            }
            long deg = parseLong(isolated.get("deg", "3"), "--deg");
            return pv::isolatedCertificate(p, deg);
        }();
        r.setString("separator", cert.separator.str());
        r.setInt("degreeBound", cert.degreeBound);
        r.setInt("sampleSize", static_cast<long long>(cert.sampleSize));
        r.setBool("unique", cert.unique);
        stampTiming(ctx, r, started);
        ctx.emit(r);
        return 0;
    }
    if (generic.cmd()->parsed()) {
        pv::RunReport r("zar generic");
        pv::BaseK k = parseK(generic.get("field"));
        r.setString("field", k.str());
        std::vector<pv::KRatFunc> opens;
        std::vector<std::string> canonOpens;
        for (const std::string& part : splitList(generic.get("psis"), ';')) {
            opens.push_back(pv::parseKRatFunc(k, trimmed(part)));
            canonOpens.push_back(opens.back().str());
        }
        r.setStrings("psis", canonOpens);
        std::vector<pv::ZarPoint> sample;
        if (generic.has("sample")) {
            for (const std::string& part : splitList(generic.get("sample"), ';'))
                sample.push_back(pv::parseZarPoint(k, trimmed(part)));
            r.setInt("degreeBound", -1);
        } else {
            if (k.p == 0)
                throw pv::DomainError(
                    "over q the verification sample must be supplied via --sample");
            long deg = parseLong(generic.get("deg", "3"), "--deg");
            sample.push_back(pv::ZarPoint::whole(k));
            sample.push_back(pv::ZarPoint::infPlace(k));
            for (const pv::KPoly& f : pv::monicIrreducibles(k, deg))
                sample.push_back(pv::ZarPoint::finPlace(f));
            r.setInt("degreeBound", deg);
        }
        r.setInt("sampleSize", static_cast<long long>(sample.size()));
        r.setBool("pass", pv::genericPointCheck(opens, sample));
        stampTiming(ctx, r, started);
        ctx.emit(r);
        return 0;
    }
    throw pv::DomainError("zar requires a mode: member, isolated, or generic");
}

int runXad(Ctx& ctx, SubIO& io) {
    auto started = Clock::now();
    pv::RunReport r("xad");
    pv::XadDescriptor d = [&] {
        if (io.has("desc")) return pv::xadFromDoc(io.get("desc"));
        pv::FieldConfig cfg = pv::FieldConfig::parse(io.get("field"));
        pv::FieldElem alpha = pv::parseElement(cfg, io.get("alpha"));
        pv::FieldElem c = pv::parseElement(cfg, io.get("c"));
        std::string zText = trimmed(io.get("z"));
        std::variant<pv::XadMarker, pv::FieldElem> z = pv::XadMarker::StationaryF;
        if (zText == "stationary-f")
            z = pv::XadMarker::StationaryF;
        else if (zText == "convergent-e")
            z = pv::XadMarker::ConvergentE;
        else
            z = pv::parseElement(cfg, zText);
        return pv::XadDescriptor{std::move(alpha), std::move(c), std::move(z)};
    }();
    r.setDoc("desc", pv::xadToDoc(d));
    pv::ZarPoint image = pv::xadMap(d);
    r.setString("point", image.str());
    pv::SeqSpec ring = pv::xadRing(d);
    r.setDoc("ring", pv::seqSpecToDoc(ring));
    r.setString("kind", kindName(ring.kind()));
    r.setString("breadth", ring.breadth().str());
    stampTiming(ctx, r, started);
    ctx.emit(r);
    return 0;
}

int runSuite(Ctx& ctx, SubIO& io) {
    std::vector<pv::SuiteResult> results;
    if (io.has("criterion")) {
        long k = parseLong(io.get("criterion"), "--criterion");
        results.push_back(pv::runCriterion(static_cast<int>(k), ctx.seed));
    } else if (io.has("module")) {
        results = pv::runModuleSuite(io.get("module"), ctx.seed);
    } else {
        results = pv::runAllCriteria(ctx.seed);
    }

    std::size_t failures = 0;
    for (const pv::SuiteResult& res : results) {
        pv::RunReport r("suite");
        r.setString("name", res.name);
        r.setInt("seed", static_cast<long long>(ctx.seed));
        r.setInt("cases", static_cast<long long>(res.cases));
        r.setInt("failures", static_cast<long long>(res.failures));
        r.setBool("pass", res.pass());
        if (!res.notes.empty()) r.setStrings("notes", res.notes);
        if (ctx.timing) r.setDouble("seconds", res.seconds);
        ctx.emit(r);
        failures += res.failures;
    }

    pv::RunReport summary("suite-summary");
    summary.setInt("seed", static_cast<long long>(ctx.seed));
    summary.setInt("suites", static_cast<long long>(results.size()));
    summary.setInt("failures", static_cast<long long>(failures));
    summary.setBool("pass", failures == 0);
    ctx.emit(summary);
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app("exact spaces of valuation-ring extensions: metrics, memberships, certificates");
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string formatName = "json";
    std::string inPath;
    bool timing = false;
    std::uint64_t seed = 0;
    if (const char* env = std::getenv("PSEUDOVAL_SEED")) {
        char* end = nullptr;
        seed = std::strtoull(env, &end, 10);
        if (end == env) seed = 0;
    }
    app.add_option("--format", formatName, "report format: json (one object per line) or text");
    app.add_option("--in", inPath, "JSON file supplying subcommand inputs by option name");
    app.add_flag("--timing", timing, "include wall-clock seconds in reports (non-deterministic)");
    app.add_option("--seed", seed, "randomness seed (default: PSEUDOVAL_SEED env, else 0)");

    auto sub = [&](const std::string& name, const std::string& desc) {
        return SubIO(app.add_subcommand(name, desc));
    };

    SubIO classifyIO = sub("classify", "classify a finite sample as pseudo-monotone");
    classifyIO.opt("field", "field config (padic-<p> | dyadic-q | dyadic-f<p>)");
    classifyIO.opt("sample", "semicolon-separated element literals");
    classifyIO.opt("seq", "sequence descriptor document (classify its prefix instead)");
    classifyIO.opt("terms", "prefix length when --seq is given (default 6)");

    SubIO breadthIO = sub("breadth", "breadth and pseudo-limit ball of a sequence spec");
    breadthIO.opt("field", "optional config cross-check");
    breadthIO.opt("seq", "sequence descriptor document");

    SubIO limitsIO = sub("limits", "pseudo-limit set; optionally test a point");
    limitsIO.opt("field", "optional config cross-check");
    limitsIO.opt("seq", "sequence descriptor document");
    limitsIO.opt("x", "element literal to test for membership");

    SubIO memberIO = sub("member", "V_E membership of a rational function");
    memberIO.opt("field", "optional config cross-check");
    memberIO.opt("seq", "sequence descriptor document");
    memberIO.opt("phi", "rational function literal (factored or raw)");

    SubIO weIO = sub("we", "w_E value of a rational function");
    weIO.opt("field", "optional config cross-check");
    weIO.opt("seq", "sequence descriptor document");
    weIO.opt("phi", "rational function literal (factored or raw)");

    SubIO distIO = sub("dist", "d_delta distance descriptor between two convergent rings");
    distIO.opt("field", "optional config cross-check");
    distIO.opt("e1", "first sequence descriptor document");
    distIO.opt("e2", "second sequence descriptor document");
    distIO.flag("window", "use the windowed estimator instead of the closed form");

    SubIO similIO = sub("simil", "similitude Psi_c applied to a sequence spec");
    similIO.opt("field", "optional config cross-check");
    similIO.opt("seq", "sequence descriptor document");
    similIO.opt("c", "nonzero scaling element literal");

    SubIO invertIO = sub("invert", "X -> 1/X duality on a divergent spec with base 0");
    invertIO.opt("field", "optional config cross-check");
    invertIO.opt("seq", "sequence descriptor document");

    SubIO sigmaIO = sub("sigma", "Sigma value w_E(X - t); optional omega comparison");
    sigmaIO.opt("field", "optional config cross-check");
    sigmaIO.opt("seq", "sequence descriptor document");
    sigmaIO.opt("t", "element literal");
    sigmaIO.opt("gamma", "extended rational threshold");

    SubIO lambdaDistIO = sub("lambda-dist", "upper-limit metric between two points");
    lambdaDistIO.opt("space", "space document {a, b, lambda: [{value, index}]}");
    lambdaDistIO.opt("x", "first point (rational)");
    lambdaDistIO.opt("y", "second point (rational)");

    SubIO lambdaBallIO = sub("lambda-ball", "open metric ball as a half-open interval");
    lambdaBallIO.opt("space", "space document {a, b, lambda: [{value, index}]}");
    lambdaBallIO.opt("x", "center (rational)");
    lambdaBallIO.opt("rho", "radius (rational)");

    SubIO coverIO = sub("cover-witness", "point missed by a finite part of the standard cover");
    coverIO.opt("space", "space document {a, b, lambda: [{value, index}]}");
    coverIO.opt("gammas", "comma-separated strictly decreasing cover levels");
    coverIO.opt("chosen", "comma-separated 1-based indices of chosen cover sets");

    CLI::App* zarCmd = app.add_subcommand("zar", "Zariski space of k(t)|k: membership and certificates");
    zarCmd->require_subcommand(0, 1);
    zarCmd->fallthrough();
    SubIO zarMemberIO(zarCmd->add_subcommand("member", "psi in the point's ring"));
    zarMemberIO.opt("field", "coefficient field (q | f<p>)");
    zarMemberIO.opt("point", "whole | inf-place | fin-place([c0, c1, ...])");
    zarMemberIO.opt("psi", "rational function as coefficient lists [num]/[den]");
    SubIO zarIsolatedIO(zarCmd->add_subcommand("isolated", "isolation certificate of a point"));
    zarIsolatedIO.opt("field", "coefficient field (q | f<p>)");
    zarIsolatedIO.opt("point", "whole | inf-place | fin-place([c0, c1, ...])");
    zarIsolatedIO.opt("deg", "degree bound for the F_p battery (default 3)");
    zarIsolatedIO.opt("sample", "semicolon-separated points for a user-supplied battery");
    SubIO zarGenericIO(zarCmd->add_subcommand("generic", "generic-point check on open sets"));
    zarGenericIO.opt("field", "coefficient field (q | f<p>)");
    zarGenericIO.opt("psis", "semicolon-separated rational function literals");
    zarGenericIO.opt("deg", "degree bound for the F_p verification sample (default 3)");
    zarGenericIO.opt("sample", "semicolon-separated points overriding the generated sample");

    SubIO xadIO = sub("xad", "X_{alpha,delta} member: residue image and valued-field ring");
    xadIO.opt("desc", "descriptor document {config, alpha, c, z}");
    xadIO.opt("field", "field config (alternative to --desc)");
    xadIO.opt("alpha", "element literal");
    xadIO.opt("c", "nonzero element literal; v(c) is the breadth");
    xadIO.opt("z", "stationary-f | convergent-e | element literal with v(z) >= 0");

    SubIO suiteIO = sub("suite", "acceptance criteria and module batteries");
    suiteIO.opt("module", "module name (valued_field, sequences, extensions, metrics, "
                          "lambda_topology, residue_zar)");
    suiteIO.opt("criterion", "acceptance criterion number (1-11)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    Ctx ctx;
    ctx.timing = timing;
    ctx.seed = seed;

    std::string active = "pseudoval";
    for (CLI::App* s : app.get_subcommands()) active = s->get_name();
    if (zarCmd->parsed())
        for (CLI::App* s : zarCmd->get_subcommands()) active = "zar " + s->get_name();

    try {
        ctx.format = pv::parseFormat(formatName);
        if (!inPath.empty()) {
            std::ifstream in(inPath);
            if (!in) throw pv::DomainError("cannot open --in file \"" + inPath + "\"");
            std::stringstream buf;
            buf << in.rdbuf();
            try {
                ctx.inDoc = Json::parse(buf.str());
            } catch (const Json::parse_error& e) {
                throw pv::ParseError(std::string("--in: ") + e.what(),
                                     e.byte > 0 ? static_cast<std::size_t>(e.byte - 1) : 0);
            }
            if (!ctx.inDoc.is_object()) throw pv::DomainError("--in document must be an object");
        }
        for (SubIO* io : {&classifyIO, &breadthIO, &limitsIO, &memberIO, &weIO, &distIO,
                          &similIO, &invertIO, &sigmaIO, &lambdaDistIO, &lambdaBallIO, &coverIO,
                          &zarMemberIO, &zarIsolatedIO, &zarGenericIO, &xadIO, &suiteIO})
            io->attachFile(ctx.inDoc.is_null() ? nullptr : &ctx.inDoc);

        if (classifyIO.cmd()->parsed()) return runClassify(ctx, classifyIO);
        if (breadthIO.cmd()->parsed()) return runBreadth(ctx, breadthIO);
        if (limitsIO.cmd()->parsed()) return runLimits(ctx, limitsIO);
        if (memberIO.cmd()->parsed()) return runMember(ctx, memberIO);
        if (weIO.cmd()->parsed()) return runWe(ctx, weIO);
        if (distIO.cmd()->parsed()) return runDist(ctx, distIO);
        if (similIO.cmd()->parsed()) return runSimil(ctx, similIO);
        if (invertIO.cmd()->parsed()) return runInvert(ctx, invertIO);
        if (sigmaIO.cmd()->parsed()) return runSigma(ctx, sigmaIO);
        if (lambdaDistIO.cmd()->parsed()) return runLambdaDist(ctx, lambdaDistIO);
        if (lambdaBallIO.cmd()->parsed()) return runLambdaBall(ctx, lambdaBallIO);
        if (coverIO.cmd()->parsed()) return runCoverWitness(ctx, coverIO);
        if (zarCmd->parsed()) return runZar(ctx, zarMemberIO, zarIsolatedIO, zarGenericIO);
        if (xadIO.cmd()->parsed()) return runXad(ctx, xadIO);
        if (suiteIO.cmd()->parsed()) return runSuite(ctx, suiteIO);

        std::cout << app.help();
        return 0;
    } catch (const pv::WindowError& ex) {
        pv::RunReport r(active);
        r.setString("error", ex.what());
        r.markHeuristic();
        ctx.emit(r);
        return 2;
    } catch (const pv::ParseError& ex) {
        pv::RunReport r(active);
        r.setString("error", ex.what());
        r.setInt("position", static_cast<long long>(ex.position()));
        ctx.emit(r);
        return 1;
    } catch (const pv::DomainError& ex) {
        pv::RunReport r(active);
        r.setString("error", ex.what());
        ctx.emit(r);
        return 1;
    }
}
