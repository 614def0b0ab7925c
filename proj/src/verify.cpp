/*
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ccsched/verify.hpp"

#include <algorithm>
#include <sstream>

namespace ccsched {

namespace {

std::string describe(const Delivery &d) {
    std::ostringstream os;
    os << "user " << d.user << " <- W^" << d.subpacket.mini.file << "_{";
    for (std::size_t i = 0; i < d.subpacket.mini.profiles.size(); ++i) {
        os << (i ? "," : "") << d.subpacket.mini.profiles[i];
    }
    os << "}," << d.subpacket.q;
    return os.str();
}

std::string describe_id(const Transmission &tx) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < tx.id.size(); ++i) os << (i ? "," : "") << tx.id[i];
    os << ")";
    return os.str();
}

}  // namespace

void VerificationReport::merge(const VerificationReport &other) {
    for (const auto &[user, subs] : other.received) received[user].insert(subs.begin(), subs.end());
    duplicates.insert(duplicates.end(), other.duplicates.begin(), other.duplicates.end());
    missing.insert(missing.end(), other.missing.begin(), other.missing.end());
    unexpected.insert(unexpected.end(), other.unexpected.begin(), other.unexpected.end());
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    max_nullset = std::max(max_nullset, other.max_nullset);
    max_profile_service = std::max(max_profile_service, other.max_profile_service);
    pass = pass && other.pass;
}

std::string VerificationReport::summary() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << ": " << received.size() << " users checked, " << missing.size() << " missing, "
       << duplicates.size() << " duplicate, " << unexpected.size() << " unexpected deliveries, " << violations.size()
       << " feasibility violations, max null set " << max_nullset << "\n";
    constexpr std::size_t kShow = 20;
    auto dump = [&](const char *label, const std::vector<Delivery> &items) {
        for (std::size_t i = 0; i < std::min(items.size(), kShow); ++i) os << "  " << label << ": " << describe(items[i]) << "\n";
        if (items.size() > kShow) os << "  ... " << items.size() - kShow << " more " << label << "\n";
    };
    dump("missing", missing);
    dump("duplicate", duplicates);
    dump("unexpected", unexpected);
    for (std::size_t i = 0; i < std::min(violations.size(), kShow); ++i) os << "  violation: " << violations[i] << "\n";
    if (violations.size() > kShow) os << "  ... " << violations.size() - kShow << " more violations\n";
    return os.str();
}

VerificationReport check_coverage(const Schedule &schedule, const NetworkConfig &cfg, const Demands &demands) {
    VerificationReport report;
    const auto library = split_library(cfg);
    const int split = static_cast<int>(schedule.subpackets_per_minifile);

    std::map<UserId, std::set<SubpacketId>> needed;
    for (const auto &[user, profile] : cfg.association) {
        const int file = demands.at(user);
        const auto cache = profile_cache(cfg, profile);
        auto &want = needed[user];
        for (const auto &mini : library.at(static_cast<std::size_t>(file - 1))) {
            if (std::binary_search(cache.begin(), cache.end(), mini)) continue;
            for (int q = 1; q <= split; ++q) want.insert({mini, q});
        }
        report.received[user];
    }

    auto consume = [&](const std::vector<Transmission> &txs) {
        for (const auto &tx : txs) {
            for (const auto &cw : tx.codewords) {
                Delivery d{cw.recipient, cw.subpacket};
                auto want = needed.find(cw.recipient);
                if (want == needed.end() || !want->second.count(cw.subpacket)) {
                    report.unexpected.push_back(d);
                } else if (!report.received[cw.recipient].insert(cw.subpacket).second) {
                    report.duplicates.push_back(d);
                }
            }
        }
    };
    consume(schedule.cc);
    consume(schedule.uc);

    for (const auto &[user, want] : needed) {
        const auto &got = report.received[user];
        for (const auto &sub : want) {
            if (!got.count(sub)) report.missing.push_back({user, sub});
        }
    }
    report.pass = report.missing.empty() && report.duplicates.empty() && report.unexpected.empty();
    return report;
}

VerificationReport check_zf_feasibility(const Schedule &schedule, const NetworkConfig &cfg) {
    VerificationReport report;
    const auto &params = schedule.params;
    const std::size_t null_limit = static_cast<std::size_t>(cfg.alpha - 1);
    const std::size_t cc_limit = schedule.strategy == Strategy::A
                                     ? static_cast<std::size_t>(params.Q * params.beta)
                                     : static_cast<std::size_t>(params.eta_hat * cfg.tbar + cfg.alpha);

    auto check = [&](const Transmission &tx, bool coded) {
        const std::string where = (coded ? "cc " : "uc ") + describe_id(tx);
        if (tx.codewords.empty()) report.violations.push_back(where + ": empty transmission");
        std::set<std::pair<UserId, ProfileSet>> streams;
        std::map<ProfileId, std::set<UserId>> per_profile;
        for (const auto &cw : tx.codewords) {
            report.max_nullset = std::max(report.max_nullset, cw.nullset.size());
            if (cw.nullset.size() > null_limit) {
                report.violations.push_back(where + ": null set of user " + std::to_string(cw.recipient) + " has " +
                                            std::to_string(cw.nullset.size()) + " > alpha-1 entries");
            }
            if (std::find(cw.nullset.begin(), cw.nullset.end(), cw.recipient) != cw.nullset.end()) {
                report.violations.push_back(where + ": user " + std::to_string(cw.recipient) + " nulled at itself");
            }
            for (UserId j : cw.nullset) {
                if (!cfg.association.count(j)) {
                    report.violations.push_back(where + ": null set names unknown user " + std::to_string(j));
                }
            }
            auto profile = cfg.association.find(cw.recipient);
            if (profile == cfg.association.end()) {
                report.violations.push_back(where + ": unknown recipient " + std::to_string(cw.recipient));
                continue;
            }
            per_profile[profile->second].insert(cw.recipient);
            if (!streams.insert({cw.recipient, cw.subpacket.mini.profiles}).second) {
                report.violations.push_back(where + ": user " + std::to_string(cw.recipient) +
                                            " gets two streams of one mini-file");
            }
        }
        const auto recipients = tx.recipients();
        std::size_t limit = coded ? cc_limit : static_cast<std::size_t>(cfg.alpha);
        if (recipients.size() > limit) {
            report.violations.push_back(where + ": " + std::to_string(recipients.size()) + " recipients exceed " +
                                        std::to_string(limit));
        }
        for (const auto &[profile, users] : per_profile) {
            report.max_profile_service = std::max(report.max_profile_service, static_cast<int>(users.size()));
            if (coded && static_cast<int>(users.size()) > params.beta) {
                report.violations.push_back(where + ": profile " + std::to_string(profile) + " serves " +
                                            std::to_string(users.size()) + " > beta users");
            }
        }
        // Each stream reaching a co-scheduled user must be cached there or nulled there.
        for (UserId j : recipients) {
            const ProfileId pj = cfg.association.at(j);
            for (const auto &cw : tx.codewords) {
                if (cw.recipient == j) continue;
                const auto &lambda = cw.subpacket.mini.profiles;
                if (std::find(lambda.begin(), lambda.end(), pj) != lambda.end()) continue;
                if (std::find(cw.nullset.begin(), cw.nullset.end(), j) != cw.nullset.end()) continue;
                report.violations.push_back(where + ": stream for user " + std::to_string(cw.recipient) +
                                            " interferes at user " + std::to_string(j));
            }
        }
    };
    for (const auto &tx : schedule.cc) check(tx, true);
    for (const auto &tx : schedule.uc) check(tx, false);
    report.pass = report.violations.empty();
    return report;
}

VerificationReport verify_schedule(const Schedule &schedule, const NetworkConfig &cfg, const Demands &demands) {
    auto report = check_coverage(schedule, cfg, demands);
    report.merge(check_zf_feasibility(schedule, cfg));
    return report;
}

}  // namespace ccsched
