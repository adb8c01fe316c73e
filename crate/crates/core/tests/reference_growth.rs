use seedgrow::catalog::{bacon_shor_2d, rotated_surface, seed_412, tanner_isomorphic};
use seedgrow::code::dressed_distance;
use seedgrow::gf2::PauliType;
use seedgrow::grow::{
    concatenate_support, grow, reduce_generator_weights, stabilizer_nonisometry, GrowthConfig,
};

#[test]
fn surface_code_from_the_412_seed() {
    let (c, rec) = concatenate_support(seed_412(), 0, PauliType::Z).unwrap();
    assert_eq!(rec.support, vec![0, 1]);
    assert_eq!(c.n(), 6);
    let (c, rec) = concatenate_support(c, 0, PauliType::X).unwrap();
    assert_eq!(rec.support, vec![0, 2, 4]);
    assert_eq!(c.n(), 9);
    let c = stabilizer_nonisometry(c, PauliType::X, 6, 7).unwrap();
    let c = reduce_generator_weights(&c);
    assert!(c.is_abelian());
    assert_eq!(c.stabilizer_k(), 1);
    assert!(c.validate().is_valid());
    assert!(tanner_isomorphic(&c, &rotated_surface(3).unwrap()));
    assert_eq!(dressed_distance(&c, PauliType::X, 3), Some(3));
    assert_eq!(dressed_distance(&c, PauliType::Z, 3), Some(3));
}

#[test]
fn bacon_shor_grows_one_size_per_iteration() {
    let seed = bacon_shor_2d(2, 2).unwrap();
    for i in 1..=3 {
        let cfg = GrowthConfig { iterations: i, ..GrowthConfig::with_caps(2, 2, 2, 2) };
        let (c, log) = grow(&seed, &cfg).unwrap();
        let l = 2 + i;
        assert!(tanner_isomorphic(&c, &bacon_shor_2d(l, l).unwrap()), "i = {i}");
        assert_eq!(log.final_bounds().lower, l);
        if i <= 2 {
            assert_eq!(dressed_distance(&c, PauliType::X, l), Some(l));
            assert_eq!(dressed_distance(&c, PauliType::Z, l), Some(l));
        }
    }
}
