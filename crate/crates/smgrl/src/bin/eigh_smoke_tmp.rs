fn main() {
    let t = std::time::Instant::now();
    let v = smgrl::eigh_smoke(2708);
    println!("min eig {} in {:.2?}", v, t.elapsed());
}
