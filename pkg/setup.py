import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
    name="hetknn",
    version="0.1.0",
    install_requires=[
          'numpy>=1.17',
          'msgpack>=1.0',
      ],
    extras_require={
        'tests': ['hypothesis>=5'],
    },
    description="k-nearest neighbor imputation of crisp, interval and fuzzy data / Python library",
    long_description=long_description,
    long_description_content_type="text/markdown",
    python_requires=">=3.6",
    packages=['hetknn', 'hetknn.lib'],
    package_data={
        '': ['config/*.json'],
    },
    entry_points={
        'console_scripts': [
            'hetknn = hetknn.cli:main',
        ],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
)

# vim: expandtab sw=4 ts=4
