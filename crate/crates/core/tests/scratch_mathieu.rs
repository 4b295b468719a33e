// Temporary generator validation; deleted before finalizing.
use ccgraph_core::{FiniteGroup, Permutation};

#[test]
#[ignore]
fn validate_mathieu_generators() {
    let m11_gens = vec![
        Permutation::parse("(1,2,3,4,5,6,7,8,9,10,11)", 11).unwrap(),
        Permutation::parse("(3,7,11,8)(4,10,5,6)", 11).unwrap(),
    ];
    let m11 = FiniteGroup::enumerate("M11", &m11_gens, 100_000).unwrap();
    println!("M11 order = {}", m11.order());
    let labels: Vec<&str> = m11.classes().iter().map(|c| c.label.as_str()).collect();
    println!("M11 classes = {labels:?}");

    let m12_gens = vec![
        Permutation::parse("(1,2,3,4,5,6,7,8,9,10,11)", 12).unwrap(),
        Permutation::parse("(3,7,11,8)(4,10,5,6)", 12).unwrap(),
        Permutation::parse("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", 12).unwrap(),
    ];
    let m12 = FiniteGroup::enumerate("M12", &m12_gens, 200_000).unwrap();
    println!("M12 order = {}", m12.order());
    let info: Vec<(String, u64, usize)> = m12
        .classes()
        .iter()
        .map(|c| (c.label.clone(), c.elem_order, c.size))
        .collect();
    println!("M12 classes = {info:?}");
}

#[test]
#[ignore]
fn validate_m22_generators() {
    let gens = vec![
        Permutation::parse(
            "(1,2,3,4,5,6,7,8,9,10,11)(12,13,14,15,16,17,18,19,20,21,22)",
            22,
        )
        .unwrap(),
        Permutation::parse(
            "(1,4,5,9,3)(2,8,10,7,6)(12,15,16,20,14)(13,19,21,18,17)",
            22,
        )
        .unwrap(),
        Permutation::parse(
            "(1,21)(2,10,8,6)(3,13,4,17)(5,19,9,18)(11,22)(12,14,16,20)",
            22,
        )
        .unwrap(),
    ];
    let m22 = FiniteGroup::enumerate("M22", &gens, 1_000_000).unwrap();
    println!("M22 order = {}", m22.order());
    let info: Vec<(String, u64, usize)> = m22
        .classes()
        .iter()
        .map(|c| (c.label.clone(), c.elem_order, c.size))
        .collect();
    println!("M22 classes = {info:?}");
}
