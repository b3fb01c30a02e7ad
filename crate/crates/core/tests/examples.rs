// Runs every example's `main` so the examples cannot silently rot.

macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main();
            }
        }
    };
}

example!(field_arithmetic);
example!(structured_matrices);
example!(h2_construction);
example!(h3_construction);
example!(elliptic_family);
example!(erasure_coding);
example!(mr_verification);
example!(field_search);
example!(lower_bounds);
