macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run().unwrap();
        }
    };
}

example!(bounds);
example!(builder_search);
example!(builders);
example!(canonical_form);
example!(certificates);
example!(cli);
example!(constructions);
example!(counting);
example!(coverage);
example!(enumerate);
example!(graph6_io);
example!(hfree_search);
example!(metrics);
example!(oracle);
