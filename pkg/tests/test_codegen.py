from pforge import codegen


def test_generated_kernels_are_current():
    assert codegen.main(["--check"]) == 0
