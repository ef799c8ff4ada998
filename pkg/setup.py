from setuptools import setup, find_packages

setup(
    name="cellricci",
    version="0.1.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.9",
    install_requires=[
        "pydantic>=2.5",
        "pydantic-settings>=2.1",
        "python-dotenv>=1.0",
        "loguru>=0.7",
        "rich>=13.7",
        "numpy>=1.26",
        "networkx>=3.2",
    ],
    entry_points={
        "console_scripts": [
            "cellricci=cellricci.cli:main",
        ],
    },
)
