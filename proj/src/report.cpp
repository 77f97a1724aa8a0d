// SPDX-License-Identifier: Apache-2.0

#include "ediz/report.hpp"

#include <cmath>
#include <cstdio>

namespace ediz {

namespace {

// JSON has no infinity literal; infinite PSNR travels as a string.
nlohmann::json number_or_inf(double v) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    return v;
}

double parse_number_or_inf(const nlohmann::json& j) {
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (s == "inf")
            return std::numeric_limits<double>::infinity();
        if (s == "-inf")
            return -std::numeric_limits<double>::infinity();
        throw std::invalid_argument("report: bad numeric field '" + s + "'");
    }
    return j.get<double>();
}

nlohmann::json row_to_json(const MetricRow& row) {
    return {{"mse", row.mse},
            {"psnr", number_or_inf(row.psnr)},
            {"ssim", row.ssim},
            {"hf_energy", row.hf_energy}};
}

MetricRow row_from_json(const nlohmann::json& j) {
    MetricRow row;
    row.mse = j.at("mse").get<double>();
    row.psnr = parse_number_or_inf(j.at("psnr"));
    row.ssim = j.at("ssim").get<double>();
    row.hf_energy = j.at("hf_energy").get<double>();
    return row;
}

double delta_of(double ediz_value, double plain_value) {
    if (std::isinf(ediz_value) && std::isinf(plain_value) && ediz_value == plain_value)
        return 0.0;
    return ediz_value - plain_value;
}

MetricRow delta_row(const MetricRow& ediz_row, const MetricRow& plain_row) {
    return MetricRow{delta_of(ediz_row.mse, plain_row.mse),
                     delta_of(ediz_row.psnr, plain_row.psnr),
                     delta_of(ediz_row.ssim, plain_row.ssim),
                     delta_of(ediz_row.hf_energy, plain_row.hf_energy)};
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void append_row(std::string& out, const char* prefix, const MetricRow& row) {
    out += std::string(prefix) + ".mse = " + fmt(row.mse) + "\n";
    out += std::string(prefix) + ".psnr = " + fmt(row.psnr) + "\n";
    out += std::string(prefix) + ".ssim = " + fmt(row.ssim) + "\n";
    out += std::string(prefix) + ".hf_energy = " + fmt(row.hf_energy) + "\n";
}

} // namespace

nlohmann::json to_json(const CompareReport& report) {
    return {{"config",
             {{"kernel", report.kernel_name}, {"factor", report.factor}, {"gain", report.gain}}},
            {"plain", row_to_json(report.plain.luma)},
            {"ediz", row_to_json(report.ediz.luma)},
            {"delta", row_to_json(delta_row(report.ediz.luma, report.plain.luma))},
            {"artifacts", report.artifacts}};
}

CompareReport compare_report_from_json(const nlohmann::json& j) {
    CompareReport report;
    const auto& config = j.at("config");
    report.kernel_name = config.at("kernel").get<std::string>();
    report.factor = config.at("factor").get<int>();
    report.gain = config.at("gain").get<double>();
    report.plain.luma = row_from_json(j.at("plain"));
    report.ediz.luma = row_from_json(j.at("ediz"));
    report.artifacts = j.at("artifacts").get<std::vector<std::string>>();
    return report;
}

std::string to_text(const CompareReport& report) {
    std::string out;
    out += "kernel = " + report.kernel_name + "\n";
    out += "factor = " + std::to_string(report.factor) + "\n";
    out += "gain = " + fmt(report.gain) + "\n";
    append_row(out, "plain", report.plain.luma);
    append_row(out, "ediz", report.ediz.luma);
    append_row(out, "delta", delta_row(report.ediz.luma, report.plain.luma));
    for (std::size_t c = 0; c < report.plain.channel.size(); ++c) {
        if (report.plain.channel.size() > 1) {
            append_row(out, ("plain.ch" + std::to_string(c)).c_str(), report.plain.channel[c]);
            append_row(out, ("ediz.ch" + std::to_string(c)).c_str(), report.ediz.channel[c]);
        }
    }
    for (const auto& a : report.artifacts)
        out += "artifact = " + a + "\n";
    return out;
}

} // namespace ediz
