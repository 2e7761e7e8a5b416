/*
   Copyright 2026 The kappa-feq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "kappafeq/samples.hpp"

namespace kappafeq {

const std::vector<RatFunc>& default_samples() {
    static const std::vector<RatFunc> samples = [] {
        const RatFunc t = RatFunc::variable();
        const RatFunc one(Rational(1));
        std::vector<RatFunc> s;
        s.push_back(t);
        s.push_back(t + one);
        s.push_back(t * t);
        s.push_back(t * t * t - RatFunc(Rational(2)));
        s.push_back(one / (t + one));
        s.push_back((t * t + one) / (t - RatFunc(Rational(3))));
        s.push_back(RatFunc(Rational(2)));
        s.push_back(RatFunc(make_rational(1, 2)));
        s.push_back(RatFunc(Rational(-1)));
        return s;
    }();
    return samples;
}

}  // namespace kappafeq
