pub fn eigh_smoke(n: usize) -> f64 {
    use ndarray::Array2;
    use ndarray_linalg::Eigh;
    let mut a = Array2::<f64>::eye(n);
    a[[0, 0]] = 2.0;
    let (vals, _vecs) = a.eigh(ndarray_linalg::UPLO::Lower).unwrap();
    vals[0]
}
