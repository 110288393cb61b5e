#include "exotic/correspondence.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <stdexcept>
#include <tuple>

namespace exotic {

namespace {

constexpr unsigned kRejectionBudget = 20;
constexpr unsigned kEscalatedSamples = 101;
constexpr long kEscalatedBound = 1000000;

struct StratumShapes {
    Partition lam_ell;
    std::optional<Partition> lam_ell_plus; // absent when 2(l+1) > n
};

StratumShapes stratum_shapes(unsigned n, unsigned ell) {
    StratumShapes s{two_step_partition(n, ell), std::nullopt};
    if (2 * (ell + 1) <= n)
        s.lam_ell_plus = two_step_partition(n, ell + 1);
    return s;
}

RatMatrix column_of_line(const Subspace& L, unsigned p) {
    RatMatrix v(p, 1);
    for (unsigned i = 0; i < p; ++i)
        v.at(i, 0) = L.basis().at(0, i);
    return v;
}

// z = [[0,a],[b,0]] embedded in Q^(n x n).
RatMatrix embed_z(const Ambient& amb, const RatMatrix& a, const RatMatrix& b) {
    const unsigned p = amb.p, q = amb.q;
    RatMatrix z(p + q, p + q);
    for (unsigned i = 0; i < p; ++i)
        for (unsigned j = 0; j < q; ++j)
            z.at(i, p + j) = a.at(i, j);
    for (unsigned i = 0; i < q; ++i)
        for (unsigned j = 0; j < p; ++j)
            z.at(p + i, j) = b.at(i, j);
    return z;
}

} // namespace

std::vector<Partition> good_partitions(const ExoticOrbitLabel& lab) {
    const unsigned ell = lab.r + lab.s;
    std::vector<Partition> out{two_step_partition(lab.ambient.n(), ell)};
    if (refine_type(lab) == RefinedType::IIstar)
        out.push_back(two_step_partition(lab.ambient.n(), ell + 1));
    return out;
}

long long dim_conormal_variety(const Ambient& amb) {
    const long long k = amb.k, n = amb.n(), p = amb.p;
    return k * (n - k) + p - 1;
}

std::optional<unsigned long> fiber_dimension(const ExoticPoint& pt, const Partition& lam) {
    const ExoticOrbitLabel lab = classify_exotic_point(pt);
    const Ambient& amb = pt.ambient;
    const unsigned p = amb.p, n = amb.n();
    const unsigned r = lab.r, s = lab.s, ell = r + s;
    const StratumShapes shapes = stratum_shapes(n, ell);

    const RatMatrix v = column_of_line(pt.L, p);
    const Subspace ker_ta = kernel(pt.a.transpose());        // in Q^p
    const Subspace v_perp = kernel(v.transpose());           // {u : u^t v = 0}
    const Subspace admissible = intersect(ker_ta, v_perp);   // Lemma 5.3(b) constraint set
    const Subspace im_tb = image(pt.b.transpose());

    if (lam == shapes.lam_ell) {
        unsigned long direct = 0, closed = 0;
        switch (lab.typ) {
        case ExoticType::I:
            // v in Im a forces u^t v = 0 on all of ker a^t
            if (admissible.dim() != ker_ta.dim())
                throw ConsistencyError("fiber_dimension: v-orthogonality not implied for type I");
            direct = ker_ta.dim();
            closed = p - r;
            break;
        case ExoticType::II:
            if (!contains(admissible, im_tb))
                throw ConsistencyError("fiber_dimension: Im b^t not admissible for type II");
            direct = im_tb.dim();
            closed = s;
            break;
        case ExoticType::III:
            direct = 0; // u = 0 is the only choice
            closed = 0;
            break;
        }
        if (direct != closed)
            throw ConsistencyError("fiber_dimension: direct computation disagrees with closed form");
        return closed;
    }

    if (shapes.lam_ell_plus && lam == *shapes.lam_ell_plus) {
        if (lab.typ != ExoticType::II)
            return std::nullopt; // fiber meets only the (n-l,l)* orbit
        if (ell == amb.min_k_nk())
            return std::nullopt; // rank cap: rk x = l+1 would exceed min{k,n-k}
        const bool nonempty_direct = im_tb.dim() < admissible.dim();
        const bool nonempty_closed = ell + 1 < p;
        if (nonempty_direct != nonempty_closed)
            throw ConsistencyError("fiber_dimension: emptiness criteria disagree");
        if (!nonempty_closed)
            return std::nullopt;
        const unsigned long direct = admissible.dim(); // u in admissible \ Im b^t, open dense
        const unsigned long closed = p - r - 1;
        if (direct != closed)
            throw ConsistencyError("fiber_dimension: direct computation disagrees with closed form");
        return closed;
    }

    return std::nullopt; // other Jordan types never meet the fiber
}

std::optional<long long> delta(const ExoticOrbitLabel& lab, const Partition& lam) {
    const Ambient& amb = lab.ambient;
    const unsigned ell = lab.r + lab.s;
    const StratumShapes shapes = stratum_shapes(amb.n(), ell);
    unsigned ell_of_lam;
    if (lam == shapes.lam_ell)
        ell_of_lam = ell;
    else if (shapes.lam_ell_plus && lam == *shapes.lam_ell_plus)
        ell_of_lam = ell + 1;
    else
        throw std::invalid_argument("delta: unsupported lambda " + lam.to_string());

    const std::optional<unsigned long> fd = fiber_dimension(representative(lab), lam);
    if (!fd)
        return std::nullopt;
    return static_cast<long long>(dim_exotic_orbit(lab)) + static_cast<long long>(*fd) +
           static_cast<long long>(spaltenstein_grassmann_dim(ell_of_lam, amb.k, amb.n()));
}

RatMatrix generic_x(const ExoticPoint& pt, const Partition& lam, SeededRng& rng, long bound) {
    const ExoticOrbitLabel lab = classify_exotic_point(pt);
    const Ambient& amb = pt.ambient;
    const unsigned p = amb.p, n = amb.n();
    const unsigned ell = lab.r + lab.s;
    const StratumShapes shapes = stratum_shapes(n, ell);

    const RatMatrix v = column_of_line(pt.L, p);
    RatMatrix u(p, 1);

    if (lam == shapes.lam_ell) {
        switch (lab.typ) {
        case ExoticType::I: {
            Subspace space = kernel(pt.a.transpose());
            u = random_in_subspace(space, rng, bound);
            break;
        }
        case ExoticType::II: {
            Subspace space = image(pt.b.transpose());
            u = random_in_subspace(space, rng, bound);
            break;
        }
        case ExoticType::III:
            break; // u = 0, x = z
        }
    } else if (shapes.lam_ell_plus && lam == *shapes.lam_ell_plus) {
        if (!fiber_dimension(pt, lam))
            throw std::invalid_argument("generic_x: empty (point, lambda) stratum");
        const Subspace admissible =
            intersect(kernel(pt.a.transpose()), kernel(v.transpose()));
        const Subspace im_tb = image(pt.b.transpose());
        bool found = false;
        for (unsigned attempt = 0; attempt < kRejectionBudget && !found; ++attempt) {
            u = random_in_subspace(admissible, rng, bound);
            found = !contains_vector(im_tb, u);
        }
        if (!found)
            throw GenericityError(
                "generic_x: rejection budget exhausted sampling u outside Im b^t");
    } else {
        throw std::invalid_argument("generic_x: empty (point, lambda) stratum");
    }

    RatMatrix x = embed_z(amb, pt.a, pt.b);
    for (unsigned i = 0; i < p; ++i) {
        if (v.at(i, 0) == 0)
            continue;
        for (unsigned j = 0; j < p; ++j)
            x.at(i, j) = v.at(i, 0) * u.at(j, 0);
    }

    // Postconditions, asserted on every call.
    if (!(x * x).is_zero())
        throw ConsistencyError("generic_x: x^2 != 0");
    const ThetaSplit split = theta_split(x, p, amb.q);
    if (split.minus_theta_part != embed_z(amb, pt.a, pt.b))
        throw ConsistencyError("generic_x: x^(-theta) != z");
    if (!contains(pt.L, image(split.theta_part)))
        throw ConsistencyError("generic_x: Im x^theta not inside L");
    if (!contains(kernel(split.theta_part), pt.L))
        throw ConsistencyError("generic_x: L not inside ker x^theta");
    if (!is_nilpotent(split.minus_theta_part))
        throw ConsistencyError("generic_x: x^(-theta) not nilpotent");
    if (jordan_type(x) != lam)
        throw ConsistencyError("generic_x: jordan type is not " + lam.to_string());
    return x;
}

Subspace generic_w(const RatMatrix& x, unsigned k, SeededRng& rng, long bound) {
    if (x.rows() != x.cols())
        throw std::invalid_argument("generic_w: x not square");
    if (!(x * x).is_zero())
        throw std::invalid_argument("generic_w: x^2 != 0");
    const unsigned n = static_cast<unsigned>(x.rows());
    const unsigned rk = static_cast<unsigned>(rank(x));
    if (rk > std::min(k, n - k))
        throw std::invalid_argument("generic_w: rk x > min{k, n-k}");

    const Subspace im = image(x);
    const Subspace ker_x = kernel(x);
    for (unsigned attempt = 0; attempt < kRejectionBudget; ++attempt) {
        RatMatrix rows(k, n);
        for (unsigned i = 0; i < rk; ++i)
            for (unsigned j = 0; j < n; ++j)
                rows.at(i, j) = im.basis().at(i, j);
        for (unsigned i = rk; i < k; ++i) {
            const RatMatrix sample = random_in_subspace(ker_x, rng, bound);
            for (unsigned j = 0; j < n; ++j)
                rows.at(i, j) = sample.at(j, 0);
        }
        Subspace w = Subspace::from_rows(rows);
        if (w.dim() != k)
            continue; // dimension-deficient sample
        if (!contains(w, im) || !contains(ker_x, w))
            throw ConsistencyError("generic_w: Im x <= W <= ker x violated");
        return w;
    }
    throw GenericityError("generic_w: retry budget exhausted sampling W");
}

namespace {

using TableauKey = std::tuple<unsigned, unsigned, unsigned, unsigned>;

TableauKey key_of(const MarkedTableau& t) {
    return {t.n1, t.n2, t.ell, t.mark};
}

struct VoteRound {
    std::map<TableauKey, unsigned> votes;
    std::map<TableauKey, MarkedTableau> tableaux;
    std::map<TableauKey, Witness> witnesses;
};

VoteRound run_samples(const ExoticPoint& rep, const Partition& lam, unsigned k,
                      SeededRng& rng, unsigned samples, long bound) {
    VoteRound round;
    for (unsigned i = 0; i < samples; ++i) {
        RatMatrix x = generic_x(rep, lam, rng, bound);
        Subspace w = generic_w(x, k, rng, bound);
        const MarkedTableau t = classify_flag_pair(FlagPair{rep.ambient, w, rep.L});
        const TableauKey key = key_of(t);
        if (++round.votes[key] == 1) {
            round.tableaux.emplace(key, t);
            round.witnesses.emplace(key, Witness{std::move(x), std::move(w), rep.L});
        }
    }
    return round;
}

std::string format_tally(const VoteRound& round) {
    std::string out;
    for (const auto& [key, count] : round.votes) {
        if (!out.empty())
            out += "; ";
        out += render_tableau(round.tableaux.at(key), RenderFormat::ascii) + ": " +
               std::to_string(count);
    }
    return out;
}

} // namespace

std::vector<PreimageEntry> phi_preimage(const ExoticOrbitLabel& lab, SeededRng& rng,
                                        unsigned samples, long bound) {
    if (samples == 0)
        throw std::invalid_argument("phi_preimage: samples must be >= 1");
    const ExoticPoint rep = representative(lab);
    std::vector<PreimageEntry> out;
    for (const Partition& lam : good_partitions(lab)) {
        VoteRound round = run_samples(rep, lam, lab.ambient.k, rng, samples, bound);
        auto winner = std::max_element(
            round.votes.begin(), round.votes.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
        bool strict = 2 * winner->second > samples;
        bool healthy = 10 * winner->second >= 9 * samples; // >= 90% of samples
        unsigned round_samples = samples;
        bool escalated = false;
        if (!strict || !healthy) {
            // One escalation with a larger bound, then hard failure.
            escalated = true;
            round_samples = kEscalatedSamples;
            round = run_samples(rep, lam, lab.ambient.k, rng, round_samples, kEscalatedBound);
            winner = std::max_element(
                round.votes.begin(), round.votes.end(),
                [](const auto& a, const auto& b) { return a.second < b.second; });
            strict = 2 * winner->second > round_samples;
            if (!strict)
                throw GenericityError("phi_preimage: no strict majority for lambda=" +
                                      lam.to_string() + "; tally: " + format_tally(round));
        }
        out.push_back(PreimageEntry{lam, round.tableaux.at(winner->first),
                                    round.witnesses.at(winner->first), winner->second,
                                    round_samples, escalated});
    }
    if (out.size() == 2 && out[0].tableau == out[1].tableau)
        throw ConsistencyError(
            "phi_preimage: the two good lambdas produced the same tableau " +
            render_tableau(out[0].tableau, RenderFormat::ascii));
    return out;
}

CorrespondenceTable full_correspondence(const Ambient& amb, std::uint64_t seed,
                                        const CorrespondenceOptions& opts) {
    const std::vector<ExoticOrbitLabel> labels = enumerate_pi2k(amb);
    const SeededRng master(seed);
    std::vector<std::vector<PreimageEntry>> preimages(labels.size());

    auto work = [&](std::size_t i) {
        SeededRng child = master.child(i);
        return phi_preimage(labels[i], child, opts.samples, opts.bound);
    };
    if (opts.parallel && labels.size() > 1) {
        std::vector<std::future<std::vector<PreimageEntry>>> futures;
        futures.reserve(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i)
            futures.push_back(std::async(std::launch::async, work, i));
        for (std::size_t i = 0; i < labels.size(); ++i)
            preimages[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < labels.size(); ++i)
            preimages[i] = work(i);
    }

    const std::vector<MarkedTableau> thetas = enumerate_theta2k(amb);
    std::map<TableauKey, std::size_t> position;
    for (std::size_t i = 0; i < thetas.size(); ++i)
        position.emplace(key_of(thetas[i]), i);

    CorrespondenceTable table;
    table.ambient = amb;
    table.entries.resize(thetas.size());
    std::vector<bool> filled(thetas.size(), false);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        FiberInfo fiber{labels[i], refine_type(labels[i]), {}};
        for (PreimageEntry& entry : preimages[i]) {
            const auto it = position.find(key_of(entry.tableau));
            if (it == position.end())
                throw ConsistencyError("full_correspondence: classified tableau not in Theta");
            if (filled[it->second])
                throw ConsistencyError(
                    "full_correspondence: tableau " +
                    render_tableau(entry.tableau, RenderFormat::ascii) +
                    " appears in two fibers");
            filled[it->second] = true;
            table.entries[it->second] = CorrespondenceEntry{
                entry.tableau, labels[i], entry.lam, std::move(entry.witness)};
            fiber.preimage.push_back(entry.tableau);
            table.escalated = table.escalated || entry.escalated;
        }
        const std::size_t expected = fiber.refined == RefinedType::IIstar ? 2 : 1;
        if (fiber.preimage.size() != expected)
            throw ConsistencyError("full_correspondence: fiber law violated for label " +
                                   to_string(fiber.refined));
        table.fibers.push_back(std::move(fiber));
    }
    std::string missing;
    for (std::size_t i = 0; i < thetas.size(); ++i)
        if (!filled[i])
            missing += (missing.empty() ? "" : ", ") +
                       render_tableau(thetas[i], RenderFormat::ascii);
    if (!missing.empty())
        throw ConsistencyError("full_correspondence: map not total; missing tableaux: " +
                               missing);
    table.bijective = true;
    for (const FiberInfo& f : table.fibers)
        if (f.preimage.size() != 1)
            table.bijective = false;
    return table;
}

bool check_bijectivity_criterion(const Ambient& amb, const CorrespondenceTable& table) {
    const unsigned n = amb.n();
    const bool predicate = amb.p <= std::max({amb.k, n - amb.k, amb.q + 1});
    if (table.bijective != predicate)
        throw ConsistencyError("check_bijectivity_criterion: computed table " +
                               std::string(table.bijective ? "is" : "is not") +
                               " bijective but the criterion p <= max{k,n-k,q+1} says otherwise");
    return table.bijective;
}

ExoticOrbitLabel closed_form_phi_pqk_equal(const MarkedTableau& t) {
    const Ambient& amb = t.ambient;
    if (!(amb.p == amb.q && amb.k == amb.p))
        throw std::invalid_argument("closed_form_phi_pqk_equal: requires p = q = k");
    ExoticType typ;
    switch (t.mark) {
    case 2: typ = ExoticType::I; break;
    case 1: typ = ExoticType::II; break;
    default: typ = ExoticType::III; break;
    }
    return ExoticOrbitLabel{amb, t.n1, t.n2, typ};
}

} // namespace exotic
