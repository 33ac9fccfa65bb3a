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

#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace aerolink
{
    // Shortest round-trip decimal form; locale independent.
    std::string format_double(double v);

    class CsvWriter
    {
    public:
        CsvWriter(std::ostream &os, std::initializer_list<std::string_view> header);
        CsvWriter(std::ostream &os, const std::vector<std::string> &header);

        CsvWriter &cell(double v);
        CsvWriter &cell(long long v);
        CsvWriter &cell(int v) { return cell(static_cast<long long>(v)); }
        CsvWriter &cell(std::size_t v) { return cell(static_cast<long long>(v)); }
        CsvWriter &cell(std::string_view v);
        void end_row();

    private:
        void sep();
        std::ostream &os_;
        std::size_t columns_;
        std::size_t filled_ = 0;
    };
}
