// SPDX-License-Identifier: Apache-2.0
//
// risphase - phase-alignment analysis for RIS-assisted wireless channels
// Copyright (C) 2026 the risphase contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RIS_IO_CSV_HPP
#define RIS_IO_CSV_HPP

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ris/laplace.hpp"
#include "ris/outage.hpp"

namespace ris {

// Self-describing CSV: '#'-prefixed metadata lines, one header row, then
// data rows. Number formatting goes through snprintf("%.17g") so identical
// doubles always serialize to identical bytes.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : out_(path) {
        if (!out_)
            throw std::runtime_error("CsvWriter: cannot open " + path);
    }

    void metadata(const std::string& key, const std::string& value) {
        out_ << "# " << key << ": " << value << "\n";
    }

    void header(const std::vector<std::string>& columns) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            out_ << (i ? "," : "") << columns[i];
        out_ << "\n";
    }

    void begin_row() { first_field_ = true; }

    void field(double v) {
        sep();
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out_ << buf;
    }

    void field(std::uint64_t v) {
        sep();
        out_ << v;
    }

    void field(const std::string& v) {
        sep();
        out_ << v;
    }

    void end_row() { out_ << "\n"; }

    static std::string format(double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return buf;
    }

private:
    void sep() {
        if (!first_field_)
            out_ << ",";
        first_field_ = false;
    }

    std::ofstream out_;
    bool first_field_ = true;
};

using MetadataList = std::vector<std::pair<std::string, std::string>>;

// gamma_t_db,p_out,ci_low,ci_high,trials,provenance plus the clamped
// min(p_out, 1) companion for raw asymptotic values.
inline void write_outage_csv(const std::string& path, const OutageCurve& curve,
                             const MetadataList& metadata) {
    CsvWriter w(path);
    for (const auto& [k, v] : metadata)
        w.metadata(k, v);
    bool any_low = false;
    for (const auto& pt : curve.points)
        any_low = any_low || pt.low_confidence;
    if (any_low) {
        std::string pts;
        for (const auto& pt : curve.points)
            if (pt.low_confidence)
                pts += (pts.empty() ? "" : " ") + CsvWriter::format(pt.gamma_t_db);
        w.metadata("warning", "low-confidence points (fewer than 10 events) at gamma_t_db " + pts);
    }
    w.header({"gamma_t_db", "p_out", "ci_low", "ci_high", "trials", "provenance",
              "p_out_clamped"});
    for (const auto& pt : curve.points) {
        w.begin_row();
        w.field(pt.gamma_t_db);
        w.field(pt.p_out);
        w.field(pt.ci_low);
        w.field(pt.ci_high);
        w.field(pt.trials);
        w.field(std::string(to_string(pt.provenance)));
        w.field(std::min(pt.p_out, 1.0));
        w.end_row();
    }
}

// series,index,value rows: the transform coefficients (n, c_n) followed by
// the Maclaurin coefficients (k, a_k).
inline void write_series_csv(const std::string& path, const InversePowerSeries& ips,
                             const MaclaurinSeries& mac, const MetadataList& metadata) {
    CsvWriter w(path);
    for (const auto& [k, v] : metadata)
        w.metadata(k, v);
    w.metadata("scale", ips.scale_note);
    w.metadata("x_max", CsvWriter::format(mac.x_max));
    w.header({"series", "index", "value"});
    for (std::size_t n = 1; n <= ips.order(); ++n) {
        w.begin_row();
        w.field(std::string("c"));
        w.field(static_cast<std::uint64_t>(n));
        w.field(static_cast<double>(ips.c(n)));
        w.end_row();
    }
    for (std::size_t k = 0; k < mac.order(); ++k) {
        w.begin_row();
        w.field(std::string("a"));
        w.field(static_cast<std::uint64_t>(k));
        w.field(static_cast<double>(mac.coefficients[k]));
        w.end_row();
    }
}

} // namespace ris

#endif // RIS_IO_CSV_HPP
