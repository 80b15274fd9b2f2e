#pragma once

#include <memory>
#include <string>
#include <vector>

namespace pseudoval {

enum class ReportFormat { Json, Text };

ReportFormat parseFormat(const std::string& name);  // "json" | "text"

// Ordered key/value report for one command run. Renders as a single JSON object
// per line, or as "key: value" text lines. The heuristic flag appears only when
// set: exact verdicts never carry it, heuristic verdicts always do.
class RunReport {
public:
    explicit RunReport(std::string command);
    RunReport(RunReport&&) noexcept;
    RunReport& operator=(RunReport&&) noexcept;
    ~RunReport();

    void setString(const std::string& key, const std::string& value);
    void setBool(const std::string& key, bool value);
    void setInt(const std::string& key, long long value);
    void setDouble(const std::string& key, double value);  // display-only values
    void setDoc(const std::string& key, const std::string& jsonText);
    void setStrings(const std::string& key, const std::vector<std::string>& values);

    void markHeuristic();
    bool heuristic() const;

    std::string render(ReportFormat format) const;  // no trailing newline

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace pseudoval
