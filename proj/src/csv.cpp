// aerolink - link statistics for RIS-assisted UAV relaying under channel aging
// Copyright (C) 2026 The aerolink authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "aerolink/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace aerolink
{
    std::string format_double(double v)
    {
        if (std::isnan(v))
            return "nan";
        if (std::isinf(v))
            return v > 0 ? "inf" : "-inf";
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof(buf), v);
        return std::string(buf, res.ptr);
    }

    CsvWriter::CsvWriter(std::ostream &os, std::initializer_list<std::string_view> header)
        : os_(os), columns_(header.size())
    {
        for (auto h : header)
            cell(h);
        end_row();
    }

    CsvWriter::CsvWriter(std::ostream &os, const std::vector<std::string> &header)
        : os_(os), columns_(header.size())
    {
        for (const auto &h : header)
            cell(std::string_view(h));
        end_row();
    }

    void CsvWriter::sep()
    {
        if (filled_ == columns_)
            throw std::logic_error("CsvWriter: too many cells in row");
        if (filled_ > 0)
            os_ << ',';
        ++filled_;
    }

    CsvWriter &CsvWriter::cell(double v)
    {
        sep();
        os_ << format_double(v);
        return *this;
    }

    CsvWriter &CsvWriter::cell(long long v)
    {
        sep();
        os_ << v;
        return *this;
    }

    CsvWriter &CsvWriter::cell(std::string_view v)
    {
        sep();
        os_ << v;
        return *this;
    }

    void CsvWriter::end_row()
    {
        if (filled_ != columns_)
            throw std::logic_error("CsvWriter: incomplete row");
        os_ << '\n';
        filled_ = 0;
    }
}
