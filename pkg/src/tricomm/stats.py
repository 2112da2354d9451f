"""Per-community tweet statistics backing the exploration views."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .attributed import TweetRecord
from .partition import Partition


@dataclass(frozen=True)
class CommunityStats:
    """Shares of a community's tweets per theme and media, the fraction of
    members active in each, and per-member shares for a selection.

    All shares live in [0, 1] and are computed over whatever record set the
    caller supplies, typically the currently filtered one. ``member_share``
    is populated only when a theme and/or media is selected, and omits
    members with no tweets.
    """

    community: int
    member_count: int
    tweet_count: int
    tweet_share_by_theme: dict[str, float] = field(default_factory=dict)
    tweet_share_by_media: dict[str, float] = field(default_factory=dict)
    member_coverage_by_theme: dict[str, float] = field(default_factory=dict)
    member_coverage_by_media: dict[str, float] = field(default_factory=dict)
    member_share: dict[int, float] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "community": self.community,
            "member_count": self.member_count,
            "tweet_count": self.tweet_count,
            "tweet_share": {
                "theme": dict(self.tweet_share_by_theme),
                "media": dict(self.tweet_share_by_media),
            },
            "member_coverage": {
                "theme": dict(self.member_coverage_by_theme),
                "media": dict(self.member_coverage_by_media),
            },
            "member_share": {str(n): s for n, s in self.member_share.items()},
        }


def community_stats(
    p: Partition,
    records: Sequence[TweetRecord],
    community: int,
    *,
    theme: str | None = None,
    media: str | None = None,
) -> CommunityStats:
    """Statistics of one community over the given records.

    A community with no tweets yields empty share maps rather than division
    errors. A record matches the selection when it matches every supplied
    field.
    """
    members = p.members(community)
    member_set = set(members)
    recs = [r for r in records if r.author in member_set]
    total = len(recs)

    theme_counts: dict[str, int] = {}
    media_counts: dict[str, int] = {}
    theme_authors: dict[str, set[int]] = {}
    media_authors: dict[str, set[int]] = {}
    for r in recs:
        theme_counts[r.theme] = theme_counts.get(r.theme, 0) + 1
        media_counts[r.media] = media_counts.get(r.media, 0) + 1
        theme_authors.setdefault(r.theme, set()).add(r.author)
        media_authors.setdefault(r.media, set()).add(r.author)

    member_share: dict[int, float] = {}
    if theme is not None or media is not None:
        per_member: dict[int, list[TweetRecord]] = {}
        for r in recs:
            per_member.setdefault(r.author, []).append(r)
        for n, own in per_member.items():
            matching = sum(
                1
                for r in own
                if (theme is None or r.theme == theme) and (media is None or r.media == media)
            )
            member_share[n] = matching / len(own)

    n_members = len(members)
    return CommunityStats(
        community=community,
        member_count=n_members,
        tweet_count=total,
        tweet_share_by_theme={t: c / total for t, c in theme_counts.items()},
        tweet_share_by_media={m: c / total for m, c in media_counts.items()},
        member_coverage_by_theme={t: len(a) / n_members for t, a in theme_authors.items()},
        member_coverage_by_media={m: len(a) / n_members for m, a in media_authors.items()},
        member_share=member_share,
    )
