fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").unwrap();

    let mut config = cbindgen::Config::default();
    config.language = cbindgen::Language::C;
    config.cpp_compat = true;
    config.include_guard = Some("CHATELET_H".into());
    config.include_version = false;
    config.documentation = true;
    config.enumeration.prefix_with_name = true;

    let result = cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate();

    if let Ok(data) = result {
        data.write_to_file(format!("{crate_dir}/include/chatelet.h"));
    }
    println!("cargo:rerun-if-changed=src/lib.rs");
}
