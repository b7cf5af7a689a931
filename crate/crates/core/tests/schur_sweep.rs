use affcat::schur::{check_cases, presentation_cases, sigma_cases};
use std::time::Instant;

fn sweep(n: usize, r: usize) {
    let cases = presentation_cases(n, r);
    let t = Instant::now();
    let res = check_cases(&cases, r, 0);
    let failed: Vec<_> = res.iter().filter(|c| !c.pass).collect();
    eprintln!("(n,r)=({},{}) {} cases in {:?}", n, r, res.len(), t.elapsed());
    assert!(failed.is_empty(), "{:?}", &failed[..failed.len().min(5)]);
}

#[test]
fn presentation_4_3() {
    sweep(4, 3);
}

#[test]
fn sigma_images_4_3() {
    let cases = sigma_cases(4, 3).unwrap();
    let res = check_cases(&cases, 3, 0);
    let failed: Vec<_> = res.iter().filter(|c| !c.pass).collect();
    assert!(failed.is_empty(), "{:?}", failed);
}

#[test]
fn presentation_5_3() {
    sweep(5, 3);
}

#[test]
fn presentation_5_4() {
    sweep(5, 4);
}
