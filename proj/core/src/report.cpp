#include "pseudoval/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "pseudoval/errors.hpp"

namespace pseudoval {

using Json = nlohmann::ordered_json;

ReportFormat parseFormat(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "text") return ReportFormat::Text;
    throw DomainError("unknown format \"" + name + "\" (expected json or text)");
}

struct RunReport::Impl {
    Json doc = Json::object();
    bool heuristic = false;
};

RunReport::RunReport(std::string command) : impl_(std::make_unique<Impl>()) {
    impl_->doc["command"] = std::move(command);
}
RunReport::RunReport(RunReport&&) noexcept = default;
RunReport& RunReport::operator=(RunReport&&) noexcept = default;
RunReport::~RunReport() = default;

void RunReport::setString(const std::string& key, const std::string& value) {
    impl_->doc[key] = value;
}
void RunReport::setBool(const std::string& key, bool value) { impl_->doc[key] = value; }
void RunReport::setInt(const std::string& key, long long value) { impl_->doc[key] = value; }
void RunReport::setDouble(const std::string& key, double value) { impl_->doc[key] = value; }

void RunReport::setDoc(const std::string& key, const std::string& jsonText) {
    try {
        impl_->doc[key] = Json::parse(jsonText);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("embedded document is not valid JSON: ") + e.what());
    }
}

void RunReport::setStrings(const std::string& key, const std::vector<std::string>& values) {
    Json arr = Json::array();
    for (const std::string& v : values) arr.push_back(v);
    impl_->doc[key] = arr;
}

void RunReport::markHeuristic() { impl_->heuristic = true; }
bool RunReport::heuristic() const { return impl_->heuristic; }

namespace {

void renderText(std::ostream& os, const std::string& key, const Json& v) {
    os << key << ": ";
    if (v.is_string()) os << v.get<std::string>();
    else os << v.dump();
    os << '\n';
}

} // namespace

std::string RunReport::render(ReportFormat format) const {
    Json doc = impl_->doc;
    if (impl_->heuristic) doc["heuristic"] = true;
    if (format == ReportFormat::Json) return doc.dump();
    std::ostringstream os;
    for (auto it = doc.begin(); it != doc.end(); ++it) renderText(os, it.key(), it.value());
    std::string out = os.str();
    if (!out.empty() && out.back() == '\n') out.pop_back();
    return out;
}

} // namespace pseudoval
