use std::path::PathBuf;

fn main() {
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    let dir = PathBuf::from(std::env::var("CARGO_MANIFEST_DIR").unwrap());
    let config = cbindgen::Config::from_file(dir.join("cbindgen.toml")).expect("cbindgen.toml");
    match cbindgen::Builder::new().with_crate(&dir).with_config(config).generate() {
        // only rewrites the file when its contents change
        Ok(bindings) => {
            bindings.write_to_file(dir.join("include/tga.h"));
        }
        // keep the checked-in header
        Err(e) => println!("cargo:warning=header not regenerated: {e}"),
    }
}
