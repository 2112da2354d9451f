import datetime as dt

import pytest

from tricomm import Partition, TweetRecord, community_stats


DATE = dt.date(2015, 6, 1)


def rec(author, theme="misc", media="other"):
    return TweetRecord(author, theme, media, DATE)


def share_fixture():
    """Ten-member community 0, five-member community 1; 50 community-0 tweets,
    44 of them from media 'slate.fr' and 7 about 'sport'."""
    p = Partition.from_labels([0] * 10 + [1] * 5)
    records = []
    authors = list(range(10))
    for i in range(44):
        theme = "sport" if i < 7 else "world"
        records.append(rec(authors[i % 10], theme=theme, media="slate.fr"))
    for i in range(6):
        records.append(rec(authors[i % 10], theme="world", media="lefigaro.fr"))
    records.append(rec(12, theme="sport", media="slate.fr"))  # other community
    return p, records


class TestCommunityStats:
    def test_tweet_share_fixture(self):
        p, records = share_fixture()
        stats = community_stats(p, records, 0)
        assert stats.tweet_count == 50
        assert stats.tweet_share_by_media["slate.fr"] == pytest.approx(0.88)
        assert stats.tweet_share_by_theme["sport"] == pytest.approx(0.14)

    def test_shares_sum_to_one(self):
        p, records = share_fixture()
        stats = community_stats(p, records, 0)
        assert sum(stats.tweet_share_by_media.values()) == pytest.approx(1.0)
        assert sum(stats.tweet_share_by_theme.values()) == pytest.approx(1.0)

    def test_member_coverage(self):
        p = Partition.from_labels([0, 0, 0, 0])
        records = [rec(0, theme="sport"), rec(0, theme="sport"), rec(1, theme="sport"), rec(2, theme="war")]
        stats = community_stats(p, records, 0)
        assert stats.member_coverage_by_theme["sport"] == pytest.approx(0.5)
        assert stats.member_coverage_by_theme["war"] == pytest.approx(0.25)
        assert all(0.0 <= c <= 1.0 for c in stats.member_coverage_by_theme.values())

    def test_member_share_full(self):
        p = Partition.from_labels([0, 0])
        records = [rec(0, theme="x")] * 4 + [rec(1, theme="x"), rec(1, theme="y")]
        stats = community_stats(p, records, 0, theme="x")
        assert stats.member_share[0] == 1.0
        assert stats.member_share[1] == 0.5

    def test_member_share_media_and_theme_combined(self):
        p = Partition.from_labels([0])
        records = [rec(0, theme="x", media="m"), rec(0, theme="x", media="n")]
        stats = community_stats(p, records, 0, theme="x", media="m")
        assert stats.member_share[0] == 0.5

    def test_no_selection_no_member_share(self):
        p, records = share_fixture()
        stats = community_stats(p, records, 0)
        assert stats.member_share == {}

    def test_tweetless_community_empty_maps(self):
        p, records = share_fixture()
        community_one = [r for r in records if r.author >= 10]
        assert community_one  # sanity: community 1 has a record overall
        stats = community_stats(p, [r for r in records if r.author < 10], 1)
        assert stats.tweet_count == 0
        assert stats.tweet_share_by_theme == {}
        assert stats.member_coverage_by_media == {}
        assert stats.member_share == {}

    def test_out_of_range_community(self):
        p, records = share_fixture()
        with pytest.raises(ValueError):
            community_stats(p, records, 5)

    def test_json_shape(self):
        p, records = share_fixture()
        payload = community_stats(p, records, 0, media="slate.fr").to_json_dict()
        assert payload["tweet_share"]["media"]["slate.fr"] == pytest.approx(0.88)
        assert set(payload) == {
            "community", "member_count", "tweet_count",
            "tweet_share", "member_coverage", "member_share",
        }
