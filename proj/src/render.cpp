#include "gsp4/render.hpp"

namespace gsp4 {

std::optional<Format> parse_format(const std::string& text) {
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    if (text == "md") return Format::Md;
    return std::nullopt;
}

std::string value_text(const std::optional<BigInt>& value) {
    return value ? value->to_string() : "unknown";
}

namespace {

void write_json_value(std::ostream& out, const std::optional<BigInt>& value) {
    if (!value) {
        out << "\"unknown\"";
    } else if (value->fits_int64()) {
        out << value->to_string();
    } else {
        out << '"' << value->to_string() << '"';
    }
}

}  // namespace

void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format) {
    switch (format) {
        case Format::Csv:
            out << "k,p,type,value,route\n";
            for (const OutputRecord& r : records) {
                out << r.k << ',' << r.p << ',' << r.type << ',' << value_text(r.value) << ','
                    << r.route << '\n';
            }
            break;
        case Format::Json: {
            out << "[\n";
            for (std::size_t i = 0; i < records.size(); ++i) {
                const OutputRecord& r = records[i];
                out << "  {\"k\":" << r.k << ",\"p\":" << r.p << ",\"type\":\"" << r.type
                    << "\",\"value\":";
                write_json_value(out, r.value);
                out << ",\"route\":\"" << r.route << "\"}";
                if (i + 1 < records.size()) out << ',';
                out << '\n';
            }
            out << "]\n";
            break;
        }
        case Format::Md:
            out << "| k | p | type | value | route |\n";
            out << "|---|---|------|-------|-------|\n";
            for (const OutputRecord& r : records) {
                out << "| " << r.k << " | " << r.p << " | " << r.type << " | "
                    << value_text(r.value) << " | " << r.route << " |\n";
            }
            break;
    }
}

void write_table_markdown(std::ostream& out, const std::string& type_label,
                          const std::vector<long long>& primes,
                          const std::vector<long long>& weights,
                          const std::vector<std::vector<std::string>>& cells) {
    out << "**" << type_label << "**\n\n";
    out << "| p \\ k |";
    for (long long k : weights) out << ' ' << k << " |";
    out << '\n';
    out << "|---|";
    for (std::size_t j = 0; j < weights.size(); ++j) out << "---|";
    out << '\n';
    for (std::size_t i = 0; i < primes.size(); ++i) {
        out << "| " << primes[i] << " |";
        for (const std::string& cell : cells[i]) out << ' ' << cell << " |";
        out << '\n';
    }
    out << '\n';
}

}  // namespace gsp4
