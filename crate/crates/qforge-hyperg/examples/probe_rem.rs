use qforge_hyperg::{build_dm, dm_remainder, remainder_valuations, HGData};
fn main() {
    let data = HGData::legendre();
    let dm = build_dm(&data, 1, 12).unwrap();
    let rem = dm_remainder(&dm, &data).unwrap();
    for p in [7u64, 11, 13] {
        let vals = remainder_valuations(&rem, p, 12);
        println!("p={} vals={:?}", p, vals);
    }
}
