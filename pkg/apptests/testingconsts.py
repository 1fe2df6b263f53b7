import numpy as np

from coocnet.structures import Document

RND = np.random.default_rng(seed=42)

# Desk corpus used throughout: D1:[a,b,c], D2:[a,b], D3:[b,c]
C3_DOCS = [
    Document("D1", title="a b c"),
    Document("D2", title="a b"),
    Document("D3", title="b c"),
]
C3_TRAVERSAL_EDGES = {("a", "b"): 2, ("a", "c"): 1, ("b", "c"): 2}
C3_JSONL = "\n".join(
    [
        '{"doc_id":"D1","title":"a b c"}',
        '{"doc_id":"D2","title":"a b"}',
        '{"doc_id":"D3","title":"b c"}',
    ]
)

NUM_RANDOM_CORPORA = 100
