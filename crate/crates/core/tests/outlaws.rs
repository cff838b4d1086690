use abundancy::arith::{abundancy_index_of, sigma_u64};
use abundancy::outlaw::{
    classify_rational, family_2p, family_even_perfect, family_pq, find_index_witness, weiner_outlaw_check,
};
use abundancy::primes::{is_prime, primes_up_to};
use abundancy::{ExactRatio, OutlawRule, OutlawVerdict};

fn r(n: u64, d: u64) -> ExactRatio {
    ExactRatio::new(n, d).unwrap()
}

fn parse_list(s: &str) -> Vec<ExactRatio> {
    s.split(',').map(|x| x.trim().parse().unwrap()).collect()
}

const WEINER_LIST: &str = "5/4,7/6,9/8,10/9,11/6,11/8,11/9,11/10,13/8,13/10,13/12,15/14,16/15";
const FAMILY_2P_LIST: &str =
    "19/10,25/14,37/22,43/26,55/34,61/38,73/46,91/58,97/62,115/74,127/82,133/86,145/94,163/106,181/118,187/122";
const FAMILY_P5: &str = "73/55,193/155,253/205,373/305,433/355,613/505,793/655,913/755,1093/905,1153/955,1273/1055,\
1513/1255,1633/1355,1693/1405,1873/1555,1993/1655,2413/2005,2533/2105";
const FAMILY_P7: &str = "241/203,353/301,577/497,913/791,1025/889,1585/1379,1697/1477,1921/1673,2257/1967,\
2705/2359,3041/2653,3377/2947,3601/3143,3713/3241,3937/3437,4385/3829,4945/4319";
const FAMILY_P11: &str = "289/253,817/737,1081/979,2401/2189,3985/3641,4249/3883,4777/4367,5041/4609,5569/5093,\
7417/6787,7945/7271,8209/7513,8737/7997,10321/9449,10585/9691,11377/10417";

fn pq_family_mod1(p: u64, q_max: u64) -> Vec<ExactRatio> {
    primes_up_to(q_max)
        .into_iter()
        .filter(|&q| q % p == 1)
        .filter_map(|q| family_pq(p, q).unwrap().map(|(v, _)| v))
        .collect()
}

#[test]
fn weiner_list_certified() {
    for q in parse_list(WEINER_LIST) {
        assert!(weiner_outlaw_check(&q).unwrap(), "{q}");
        let v = classify_rational(&q, 1000).unwrap();
        assert_eq!(v.rule(), Some(OutlawRule::WeinerRange), "{q}");
    }
}

#[test]
fn family_2p_reproduces_list() {
    let generated: Vec<ExactRatio> = primes_up_to(61).into_iter().filter(|&p| p >= 5).map(|p| family_2p(p).unwrap().0).collect();
    assert_eq!(generated, parse_list(FAMILY_2P_LIST));
    for p in primes_up_to(127).into_iter().filter(|&p| p >= 5) {
        let (q, v) = family_2p(p).unwrap();
        assert_eq!(v.rule(), Some(OutlawRule::Family2p));
        assert_eq!(q, r(3 * p + 4, 2 * p));
        assert_eq!(classify_rational(&q, 10).unwrap().rule(), Some(OutlawRule::Family2p));
    }
    for (p, witness) in [(2, 6), (3, 18)] {
        let (q, v) = family_2p(p).unwrap();
        assert_eq!(v, OutlawVerdict::Index { witness });
        assert_eq!(abundancy_index_of(witness).unwrap(), q);
    }
}

#[test]
fn family_pq_reproduces_lists() {
    assert_eq!(pq_family_mod1(7, 617), parse_list(FAMILY_P7));
    assert_eq!(pq_family_mod1(11, 947), parse_list(FAMILY_P11));
    // The published p = 5 list skips q = 241; everything else matches in order.
    let generated = pq_family_mod1(5, 421);
    let published = parse_list(FAMILY_P5);
    let missing: Vec<_> = generated.iter().filter(|q| !published.contains(q)).cloned().collect();
    assert_eq!(missing, vec![r(1453, 1205)]);
    let without: Vec<_> = generated.into_iter().filter(|q| q != &r(1453, 1205)).collect();
    assert_eq!(without, published);
    assert_eq!(&published[..4], &[r(73, 55), r(193, 155), r(253, 205), r(373, 305)]);
}

#[test]
fn twin_primes_never_outlaw() {
    for p in primes_up_to(2000) {
        if is_prime(p + 2) {
            assert_eq!(family_pq(p, p + 2).unwrap(), None);
            let q = r(p + 2, p);
            assert!(!classify_rational(&q, 20_000).unwrap().is_outlaw(), "{q}");
        }
    }
    assert_eq!(classify_rational(&r(5, 3), 1_000_000).unwrap(), OutlawVerdict::Unknown { search_bound: 1_000_000 });
}

#[test]
fn k_plus_one_over_k() {
    let mut cases = 0;
    for k in 2..=10_000u64 {
        let v = classify_rational(&r(k + 1, k), 1_000_000).unwrap();
        if is_prime(k) {
            assert_eq!(v, OutlawVerdict::Index { witness: k });
        } else {
            assert!(v.is_outlaw(), "{k}");
        }
        cases += 1;
    }
    assert!(cases >= 1000);
}

#[test]
fn k_plus_two_over_odd_composite() {
    for k in (9..=10_000u64).step_by(2).filter(|&k| !is_prime(k)) {
        let v = classify_rational(&r(k + 2, k), 1000).unwrap();
        assert_eq!(v.rule(), Some(OutlawRule::WeinerRange), "{k}");
    }
}

#[test]
fn outlaw_certificates_survive_search() {
    let mut outlaws = parse_list(WEINER_LIST);
    outlaws.extend(parse_list(FAMILY_2P_LIST).into_iter().take(6));
    outlaws.extend(parse_list(FAMILY_P5).into_iter().take(3));
    outlaws.extend(parse_list(FAMILY_P7).into_iter().take(2));
    outlaws.push(family_even_perfect(6).unwrap().0);
    outlaws.push(family_even_perfect(28).unwrap().0);
    for q in outlaws {
        let v = classify_rational(&q, 10).unwrap();
        let OutlawVerdict::Outlaw(cert) = &v else { panic!("{q} not certified: {v}") };
        assert!(cert.verify(&q));
        assert_eq!(find_index_witness(&q, 1_000_000).unwrap(), None, "{q}");
    }
}

#[test]
fn index_verdicts_are_sound() {
    // Every index I(n), n <= 3000, classifies as Index with a correct witness,
    // and the witness respects r >= σ(s).
    for n in 2..=3000u64 {
        let q = abundancy_index_of(n).unwrap();
        let v = classify_rational(&q, n).unwrap();
        let OutlawVerdict::Index { witness } = v else { panic!("I({n}) = {q} -> {v}") };
        assert!(witness <= n);
        assert_eq!(abundancy_index_of(witness).unwrap(), q);
        let (r_, s) = q.to_u64_parts().unwrap();
        assert!(r_ as u128 >= sigma_u64(s).unwrap());
    }
}

#[test]
fn witness_search_examples() {
    assert_eq!(find_index_witness(&r(2, 1), 100).unwrap(), Some(6));
    assert_eq!(find_index_witness(&r(3, 1), 1000).unwrap(), Some(120));
    assert_eq!(find_index_witness(&r(7, 3), 100).unwrap(), Some(12));
    assert_eq!(find_index_witness(&r(5, 4), 1_000_000).unwrap(), None);
    assert_eq!(find_index_witness(&r(4, 1), 1_000_000).unwrap(), Some(30240));
}

#[test]
fn even_perfect_family() {
    assert_eq!(family_even_perfect(6).unwrap().0, r(29, 12));
    assert_eq!(family_even_perfect(28).unwrap().0, r(121, 56));
    for n in [496u64, 8128, 33_550_336, 8_589_869_056, 137_438_691_328] {
        let (q, v) = family_even_perfect(n).unwrap();
        assert_eq!(v.rule(), Some(OutlawRule::FamilyEvenPerfect));
        assert_eq!(classify_rational(&q, 10).unwrap().rule(), Some(OutlawRule::FamilyEvenPerfect));
    }
    assert!(family_even_perfect(4).is_err());
    assert!(family_even_perfect(945).is_err());
}
