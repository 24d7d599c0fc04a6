from setuptools import setup

with open("README.md", "r") as fh:
    long_description = fh.read()
setup(
    name="congruent_partitions",
    packages=["congruent_partitions"],
    version="0.1.0",
    license="GNU General Public License v3.0",
    description="Exact counts and closed forms for partitions with multiplicities 0 or 1 mod d",
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords=["partitions", "denumerant", "quasi-polynomial", "cohomology"],
    install_requires=["pandas", "numpy", "sympy", "tqdm"],
    python_requires=">=3.9",
    entry_points={"console_scripts": ["partcount=congruent_partitions.cli:main"]},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Programming Language :: Python :: 3.9",
    ],
)
