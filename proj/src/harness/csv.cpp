#include "saso/harness/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace saso::harness {

std::string format_value(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

std::string metric_csv(const MetricSeries& series) {
    std::string out = "tick,value\n";
    for (const MetricPoint& p : series.points()) {
        out += std::to_string(p.tick);
        out += ',';
        out += format_value(p.value);
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for writing: " + path);
    file << contents;
    if (!file) throw std::runtime_error("write failed: " + path);
}

std::string summary_text(const std::vector<const MetricSeries*>& series) {
    std::string out;
    for (const MetricSeries* s : series) {
        if (s == nullptr || s->empty()) continue;
        out += "metric=" + s->name();
        out += ", mean=" + format_value(s->mean());
        out += ", min=" + format_value(s->min());
        out += ", max=" + format_value(s->max());
        out += '\n';
    }
    return out;
}

} // namespace saso::harness
