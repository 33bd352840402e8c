pub fn probe() {
    use rand::rngs::ChaCha8Rng;
    use rand::{RngExt, SeedableRng};
    use sha2::{Digest, Sha256};
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let x: f64 = rng.random_range(0.0..1.0);
    let y: f64 = rng.random();
    let i: usize = rng.random_range(0..10);
    let h = Sha256::digest(b"component");
    let arr = ndarray::Array2::<f64>::zeros((3, 4));
    let v = ndarray::Array1::<f64>::zeros(4);
    let _ = arr.dot(&v);
    let _ = (x, y, i, h[0]);
}
