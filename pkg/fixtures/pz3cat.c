{
  "body": {
    "base": "pz3",
    "hom": [
      [
        "i",
        "i",
        "e"
      ],
      [
        "i",
        "x",
        "g"
      ],
      [
        "x",
        "i",
        "gg"
      ],
      [
        "x",
        "x",
        "e"
      ]
    ],
    "objects": [
      "i",
      "x"
    ],
    "typ": {
      "i": "*",
      "x": "*"
    }
  },
  "kind": "category",
  "meta": {
    "name": "pz3cat",
    "provenance": "committed test input (group-quantale category)"
  }
}
